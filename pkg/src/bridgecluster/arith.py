"""Reduced fractions, parities mod 2 and positive continued fractions."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True, order=True)
class Ratio:
    """A reduced fraction ``p/q`` with ``q >= 0``.

    ``1/0`` is allowed as a formal vertex label; user-facing entry points
    go through :func:`parse_fraction`, which only admits ``0 < p/q < 1``.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"negative entries in {self.p}/{self.q}")
        if (self.p, self.q) == (0, 0):
            raise ValueError("0/0 is not a fraction")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not reduced")

    def __str__(self):
        return f"{self.p}/{self.q}"

    def mediant(self, other: Ratio) -> Ratio:
        return Ratio(self.p + other.p, self.q + other.q)

    def complement(self) -> Ratio:
        """``(q - p)/q``; the label of the mirrored vertex."""
        return Ratio(self.q - self.p, self.q)

    def to_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)


class Parity(enum.Enum):
    """Residue class of a reduced fraction mod 2."""

    ZERO_ONE = "0/1"
    ONE_ONE = "1/1"
    ONE_ZERO = "1/0"

    def __str__(self):
        return self.value


def parity(f: Ratio) -> Parity:
    return Parity(f"{f.p % 2}/{f.q % 2}")


@dataclass(frozen=True)
class ContinuedFraction:
    """Positive continued fraction ``1/(a_1 + 1/(a_2 + ... + 1/a_n))``."""

    terms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(int(a) for a in self.terms))
        if not self.terms:
            raise ValueError("a continued fraction needs at least one term")
        if any(a < 1 for a in self.terms):
            raise ValueError(f"terms must be positive: {list(self.terms)}")

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, k):
        return self.terms[k]

    def __str__(self):
        return "[" + ",".join(map(str, self.terms)) + "]"

    @property
    def n(self) -> int:
        return len(self.terms)

    @property
    def partial_sums(self) -> tuple[int, ...]:
        """``(l_0, l_1, ..., l_n)`` with ``l_0 = 0``."""
        sums = [0]
        for a in self.terms:
            sums.append(sums[-1] + a)
        return tuple(sums)

    @property
    def num_triangles(self) -> int:
        return sum(self.terms) - 1

    def value(self) -> Ratio:
        return cf_value(self)

    def is_canonical(self) -> bool:
        return self.n == 1 or self.terms[-1] >= 2


def cf_value(cf: ContinuedFraction | tuple[int, ...]) -> Ratio:
    """Evaluate a continued fraction with the convergent recursion.

    The empty expansion evaluates to ``0/1`` and ``[0]`` to the formal
    ``1/0``; both only appear as boundary cases of recursions.
    """
    terms = cf.terms if isinstance(cf, ContinuedFraction) else tuple(cf)
    # p_{-1}/q_{-1} = 1/0, p_0/q_0 = 0/1 for 1/(a_1 + ...)
    p_prev, q_prev = 1, 0
    p, q = 0, 1
    for a in terms:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    return Ratio(p, q)


def cf_expand(f: Ratio, variant: str = "canonical") -> ContinuedFraction:
    """Expand ``0 < p/q < 1`` as a positive continued fraction.

    ``canonical`` ends in a term ``>= 2`` (or is a single term);
    ``alternate`` is the other expansion ``[a_1, ..., a_n - 1, 1]``.
    """
    if not 0 < f.p < f.q:
        raise ValueError(f"{f} is not strictly between 0 and 1")
    if variant not in ("canonical", "alternate"):
        raise ValueError(f"unknown variant {variant!r}")
    terms = []
    p, q = f.p, f.q
    while p:
        a, r = divmod(q, p)
        terms.append(a)
        p, q = r, p
    if variant == "alternate":
        terms[-1] -= 1
        terms.append(1)
    return ContinuedFraction(tuple(terms))


def canonical(cf: ContinuedFraction) -> ContinuedFraction:
    """Fold a trailing 1 into the previous term."""
    if cf.n >= 2 and cf.terms[-1] == 1:
        return ContinuedFraction(cf.terms[:-2] + (cf.terms[-2] + 1,))
    return cf


def mirror(cf: ContinuedFraction) -> ContinuedFraction:
    """Continued fraction of ``(q - p)/q`` given one of ``p/q``."""
    a = cf.terms
    if a[0] > 1:
        return ContinuedFraction((1, a[0] - 1) + a[1:])
    if len(a) == 1:
        raise ValueError("[1] = 1/1 has no mirror in (0, 1)")
    return ContinuedFraction((a[1] + 1,) + a[2:])


_FRACTION_RE = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")
_CF_RE = re.compile(r"^\s*\[?\s*(\d+(?:\s*,\s*\d+)*)\s*\]?\s*$")


def parse_fraction(text: str) -> Ratio:
    """Parse ``"p/q"``; requires a reduced fraction strictly inside (0, 1)."""
    m = _FRACTION_RE.match(text)
    if not m:
        raise ValueError(f"malformed fraction {text!r}; expected p/q")
    p, q = int(m.group(1)), int(m.group(2))
    if q == 0 or not 0 < p < q:
        raise ValueError(f"{p}/{q} is not strictly between 0 and 1")
    if gcd(p, q) != 1:
        raise ValueError(f"{p}/{q} is not reduced")
    return Ratio(p, q)


def parse_cf(text: str) -> ContinuedFraction:
    """Parse ``"[a1,a2,...]"`` or ``"a1,a2,..."``; value must lie in (0, 1)."""
    m = _CF_RE.match(text)
    if not m:
        raise ValueError(f"malformed continued fraction {text!r}")
    terms = tuple(int(t) for t in m.group(1).split(","))
    cf = ContinuedFraction(terms)
    v = cf_value(cf)
    if not 0 < v.p < v.q:
        raise ValueError(f"{cf} = {v} is not strictly between 0 and 1")
    return cf


def reduced_fractions(q_max: int, q_min: int = 2):
    """All reduced ``p/q`` with ``0 < p < q`` and ``q_min <= q <= q_max``."""
    for q in range(q_min, q_max + 1):
        for p in range(1, q):
            if gcd(p, q) == 1:
                yield Ratio(p, q)
