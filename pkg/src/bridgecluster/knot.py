"""Alexander polynomials of two-bridge links from specialised F-polynomials.

The combinatorial route reads crossing signs off the Seifert path of the
ancestral triangle, assigns each triangle an exponent ``e_i = +-1`` and sets
``y_i = -t^{e_i}`` in the F-polynomial.  The skein route is an independent
recursion on the continued fraction and serves as the oracle.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .arith import ContinuedFraction, Parity, Ratio, canonical, cf_expand, cf_value, mirror, parity
from .errors import InvariantError, SeifertPathError
from .paths import Path, enumerate_paths, f_polynomial, left_side
from .poly import HalfLaurent, signs_to_assignment, specialize_y
from .triangle import AncestralTriangle, build


class FanSide(enum.Enum):
    BOTTOM_EDGE_IN_PATH = "bottom-edge-in-path"
    LEFT_OF_PATH = "left"
    RIGHT_OF_PATH = "right"
    EMPTY = "empty"  # fan 1 when a_1 = 1

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SeifertData:
    path: Path
    fan_sides: tuple[FanSide, ...]
    t: tuple[int, ...]
    e: tuple[int, ...]


@dataclass(frozen=True)
class AlexanderResult:
    cf: ContinuedFraction
    delta: HalfLaurent
    d_times_2: int
    s: int
    f_specialized: HalfLaurent
    t: tuple[int, ...]
    e: tuple[int, ...]


def _allowed_edge_parities(p: Parity) -> frozenset[Parity]:
    if p is Parity.ONE_ONE:
        return frozenset((Parity.ONE_ONE, Parity.ONE_ZERO))
    return frozenset((Parity.ZERO_ONE, Parity.ONE_ZERO))


def is_seifert(at: AncestralTriangle, path: Path) -> bool:
    allowed = _allowed_edge_parities(parity(at.value))
    for a, b in path.edges():
        if {parity(at.label(a)), parity(at.label(b))} != allowed:
            return False
    for (a, b), (_, c) in zip(path.edges(), path.edges()[1:]):
        shared = set(at.edge_triangles[frozenset((a, b))]) & set(at.edge_triangles[frozenset((b, c))])
        if shared:
            return False
    return True


def seifert_path(at: AncestralTriangle) -> Path:
    found = [p for p in enumerate_paths(at) if is_seifert(at, p)]
    if len(found) != 1:
        raise SeifertPathError(f"AT({at.value}) has {len(found)} Seifert paths, expected exactly 1")
    return found[0]


def classify_fans(at: AncestralTriangle, sp: Path) -> tuple[FanSide, ...]:
    used = {frozenset(e) for e in sp.edges()}
    left = left_side(at, sp)
    out = []
    for fan in at.fans:
        if fan.bottom_edge is not None and frozenset(fan.bottom_edge) in used:
            out.append(FanSide.BOTTOM_EDGE_IN_PATH)
        elif not fan.triangles:
            out.append(FanSide.EMPTY)
        elif all(i in left for i in fan.triangles):
            out.append(FanSide.LEFT_OF_PATH)
        elif not any(i in left for i in fan.triangles):
            out.append(FanSide.RIGHT_OF_PATH)
        else:
            raise SeifertPathError(f"fan {fan.k} of AT({at.value}) straddles the Seifert path")
    return tuple(out)


def _t_signs(at: AncestralTriangle, sides: tuple[FanSide, ...]) -> tuple[int, ...]:
    t = [-1 if parity(at.value) is Parity.ONE_ONE else 1]
    for side in sides[1:]:
        t.append(-t[-1] if side is FanSide.BOTTOM_EDGE_IN_PATH else t[-1])
    return tuple(t)


def _e_signs(at: AncestralTriangle, sides: tuple[FanSide, ...]) -> tuple[int, ...]:
    e = []
    for tri in at.triangles:
        k, i = tri.fan, tri.pos
        side = sides[k - 1]
        alternating = 1 if i % 2 == 1 else -1  # (-1)^(i-1)
        if side is FanSide.BOTTOM_EDGE_IN_PATH:
            e.append(-alternating)
        elif k % 2 == 1:
            e.append(1 if side is FanSide.LEFT_OF_PATH else alternating)
        else:
            e.append(1 if side is FanSide.RIGHT_OF_PATH else alternating)
    return tuple(e)


def seifert_data(at: AncestralTriangle) -> SeifertData:
    sp = seifert_path(at)
    sides = classify_fans(at, sp)
    return SeifertData(sp, sides, _t_signs(at, sides), _e_signs(at, sides))


def crossing_signs(at: AncestralTriangle) -> tuple[int, ...]:
    return seifert_data(at).t


def triangle_signs(at: AncestralTriangle) -> tuple[int, ...]:
    return seifert_data(at).e


def exponent_and_sign(cf: ContinuedFraction, t, sides) -> tuple[int, int]:
    """``(2d, s)`` for ``Delta = s * t^d * F-hat``."""
    total = 0
    for k, (a, tk, side) in enumerate(zip(cf.terms, t, sides), 1):
        if (k % 2 == 1 and tk == -1) or (k % 2 == 0 and tk == 1):
            total += a - 1
        elif side is FanSide.BOTTOM_EDGE_IN_PATH:
            total += tk
        else:
            total += 1
    value = cf_value(cf)
    exponent = cf.n + sum(cf.terms[1::2]) - value.p * value.q
    return -total, (-1 if exponent % 2 else 1)


def alexander_specialized(cf: ContinuedFraction) -> AlexanderResult:
    at = build(cf)
    data = seifert_data(at)
    f_hat = specialize_y(f_polynomial(at), signs_to_assignment(data.e))
    if not f_hat.has_integral_t_powers():
        raise InvariantError(f"specialised F of {cf} has half-integral t-powers")
    d2, s = exponent_and_sign(cf, data.t, data.fan_sides)
    delta = f_hat.shift(d2) * s
    return AlexanderResult(cf, delta, d2, s, f_hat, data.t, data.e)


# -- skein relation oracle ------------------------------------------------

_ZERO = HalfLaurent()
_ONE = HalfLaurent.const(1)
_Z = HalfLaurent.skein_factor()


def alexander_skein_oracle(cf: ContinuedFraction | tuple[int, ...]) -> HalfLaurent:
    terms = cf.terms if isinstance(cf, ContinuedFraction) else tuple(cf)
    if any(a < 0 for a in terms):
        raise ValueError(f"negative term in {list(terms)}")
    return _skein(terms)


def _smaller(terms: tuple[int, ...], than: int) -> HalfLaurent:
    # every recursive call strictly lowers sum(terms), which bounds the depth
    if sum(terms) >= than:
        raise InvariantError(f"skein recursion did not shrink at {list(terms)}")
    return _skein(terms)


def _skein(terms: tuple[int, ...]) -> HalfLaurent:
    if terms == ():
        return _ONE
    if terms == (0,):
        return _ZERO
    if terms[-1] == 0:
        return _smaller(terms[:-2], sum(terms) + 1)
    if terms == (1,):
        return _ONE
    return _skein_canonical(canonical(ContinuedFraction(terms)).terms)


@lru_cache(maxsize=None)
def _skein_canonical(terms: tuple[int, ...]) -> HalfLaurent:
    cf = ContinuedFraction(terms)
    if parity(cf_value(cf)) is Parity.ONE_ONE:
        # 1/1 only occurs for knots, whose Delta is mirror invariant;
        # the mirror has parity 0/1 and the same term sum
        cf = canonical(mirror(cf))
    terms = cf.terms
    t_n = crossing_signs(build(cf))[-1]
    head, last = terms[:-1], terms[-1]
    total = sum(terms)
    skip_two = _smaller(head + (last - 2,), total)
    if (cf.n % 2 == 1) == (t_n == 1):
        other = _smaller(head, total)
    else:
        other = _smaller(head + (last - 1,), total)
    return skip_two + _Z * other * t_n


# -- exhaustive verification ----------------------------------------------


@dataclass(frozen=True)
class VerifyRow:
    fraction: str
    cf: str
    specialized: str
    oracle: str
    match: bool
    symmetric: bool | None  # only meaningful for knots (q odd)
    mirror_invariant: bool | None

    @property
    def ok(self) -> bool:
        return self.match and self.symmetric is not False and self.mirror_invariant is not False


def verify_fraction(f: Ratio) -> VerifyRow:
    cf = cf_expand(f)
    spec = alexander_specialized(cf).delta
    oracle = alexander_skein_oracle(cf)
    symmetric = mirror_ok = None
    if f.q % 2 == 1:
        symmetric = spec.is_symmetric()
        mirror_ok = alexander_specialized(cf_expand(f.complement())).delta == spec
    return VerifyRow(str(f), str(cf), spec.to_text(), oracle.to_text(), spec == oracle, symmetric, mirror_ok)


def verify_range(q_max: int, jobs: int = 1) -> list[VerifyRow]:
    """Check the specialisation against the skein oracle for every ``q <= q_max``."""
    from .arith import reduced_fractions

    if q_max < 2:
        raise ValueError("q_max must be at least 2")
    fractions = list(reduced_fractions(q_max))
    if jobs <= 1:
        return [verify_fraction(f) for f in fractions]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(verify_fraction, fractions, chunksize=8))
