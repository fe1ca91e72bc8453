"""Paths in an ancestral triangle and the path expansion of cluster variables."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .arith import ContinuedFraction, canonical, cf_expand, cf_value, mirror
from .poly import MultiLaurent
from .triangle import RIGHT, AncestralTriangle, build


@dataclass(frozen=True)
class Path:
    """Vertex ids from the apex down to ``0/1`` or ``1/1``."""

    vertices: tuple[int, ...]

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def labels(self, at: AncestralTriangle) -> list[str]:
        return [str(at.label(v)) for v in self.vertices]

    def describe(self, at: AncestralTriangle) -> str:
        return "->".join(self.labels(at))


def enumerate_paths(at: AncestralTriangle) -> list[Path]:
    """Every path from the apex, depth first, lower denominator first."""
    out: list[Path] = []
    stack: list[int] = [at.apex]

    def walk(v: int):
        if v in at.base:
            out.append(Path(tuple(stack)))
            return
        for w in at.out_neighbors(v):
            stack.append(w)
            walk(w)
            stack.pop()

    walk(at.apex)
    return out


def path_from_labels(at: AncestralTriangle, labels: Sequence[str]) -> Path:
    vs = tuple(at.find_vertex(s) for s in labels)
    path = Path(vs)
    if not is_path(at, path):
        raise ValueError(f"{'->'.join(labels)} is not a path in AT({at.value})")
    return path


def is_path(at: AncestralTriangle, path: Path) -> bool:
    vs = path.vertices
    if not vs or vs[0] != at.apex or vs[-1] not in at.base:
        return False
    return all(b in at.out_neighbors(a) for a, b in path.edges())


def _inside(point, polygon) -> bool:
    # even-odd rule, half-open in y; integer coordinates keep it exact
    px, py = point
    inside = False
    m = len(polygon)
    for k in range(m):
        (ax, ay), (bx, by) = polygon[k], polygon[(k + 1) % m]
        if (ay > py) != (by > py):
            # px < x-coordinate of the crossing, without dividing
            lhs, rhs = (px - ax) * (by - ay), (py - ay) * (bx - ax)
            if (lhs < rhs) if by > ay else (lhs > rhs):
                inside = not inside
    return inside


def _scaled(at: AncestralTriangle):
    # all vertex coordinates are multiples of 1/(2N) and centroids of 1/(6N)
    cached = getattr(at, "_scaled_cache", None)
    if cached is None:
        scale = 6 * at.N

        def to_int(c):
            return (int(c[0] * scale), int(c[1] * scale))

        coords = [to_int(v.coord) for v in at.vertices]
        centroids = [to_int(at.centroid(t.index)) for t in at.triangles]
        cached = (coords, centroids)
        at._scaled_cache = cached
    return cached


def right_region(at: AncestralTriangle, path: Path) -> frozenset[int]:
    """Triangles enclosed by the path and the walk back up the right boundary."""
    ring = list(path.vertices)
    if ring[-1] == at.base[0]:
        ring.append(at.base[1])
    ring.extend(at.right_chain()[1:-1])
    coords, centroids = _scaled(at)
    polygon = [coords[v] for v in ring]
    return frozenset(i for i, c in enumerate(centroids, 1) if _inside(c, polygon))


def left_side(at: AncestralTriangle, path: Path) -> frozenset[int]:
    """``S_gamma``: indices of the triangles left of the path."""
    return frozenset(range(1, at.N + 1)) - right_region(at, path)


def triangle_weight(at: AncestralTriangle, i: int) -> MultiLaurent:
    n = at.N
    t = at.triangle(i)

    def x(j: int, e: int) -> dict[int, int]:
        # x_{l_n} = x_{N+1} is set to 1
        return {j: e} if 1 <= j <= n else {}

    if i == 1:
        xs = x(2, 1 if t.orientation == RIGHT else -1)
    else:
        prev = at.triangle(i - 1).orientation
        if t.orientation == RIGHT and prev == RIGHT:
            xs = {**x(i + 1, 1), **x(i - 1, -1)}
        elif t.orientation == RIGHT:
            xs = {**x(i - 1, 1), **x(i + 1, 1)}
        elif prev == RIGHT:
            xs = {**x(i - 1, -1), **x(i + 1, -1)}
        else:
            xs = {**x(i - 1, 1), **x(i + 1, -1)}
    return MultiLaurent.monomial(n, x=xs, y={i: 1})


def path_weight(at: AncestralTriangle, path: Path) -> MultiLaurent:
    weight = MultiLaurent.const(1, at.N)
    for i in sorted(left_side(at, path)):
        weight = weight * triangle_weight(at, i)
    return weight


def cluster_via_paths(at: AncestralTriangle) -> MultiLaurent:
    """Cluster variable as ``D / (x_1...x_N) * sum of path weights``."""
    n = at.N
    weights = [triangle_weight(at, i) for i in range(1, n + 1)]
    d = reduce(lambda a, b: a * b, (w.denominator() for w in weights), MultiLaurent.const(1, n))
    total = MultiLaurent(n)
    for path in enumerate_paths(at):
        s = MultiLaurent.const(1, n)
        for i in sorted(left_side(at, path)):
            s = s * weights[i - 1]
        total = total + s
    all_x = MultiLaurent.monomial(n, x={i: 1 for i in range(1, n + 1)})
    return (d * total).div_exact(all_x)


def f_polynomial(at: AncestralTriangle) -> MultiLaurent:
    n = at.N
    out: dict[tuple[int, ...], int] = {}
    for path in enumerate_paths(at):
        exp = [0] * (2 * n)
        for i in left_side(at, path):
            exp[n + i - 1] = 1
        key = tuple(exp)
        out[key] = out.get(key, 0) + 1
    return MultiLaurent(n, out)


# -- recursions -----------------------------------------------------------


def _f_terms(terms: tuple[int, ...], nvars: int) -> MultiLaurent:
    """F of a (possibly degenerate) expansion, embedded in ``nvars`` variables.

    Conventions: ``F_[] = F_[1] = 1`` and ``[..., a, 0] = [...]`` (drop two).
    """
    while terms and terms[-1] == 0:
        terms = terms[:-2]
    if terms in ((), (1,)):
        return MultiLaurent.const(1, nvars)
    return f_polynomial(build(ContinuedFraction(terms))).embed(nvars)


def _y_range(lo: int, hi: int, nvars: int) -> MultiLaurent:
    return MultiLaurent.monomial(nvars, y={i: 1 for i in range(lo, hi + 1)})


def recursion_identities(cf: ContinuedFraction) -> dict[str, tuple[MultiLaurent, MultiLaurent]]:
    """Both sides of every F-polynomial recursion that applies to ``cf``.

    ``cf`` is normalised to end in a term ``>= 2`` first.  Keys name the
    identity; values are ``(lhs, rhs)``.
    """
    cf = canonical(cf)
    a = cf.terms
    n = cf.n
    big_n = cf.num_triangles
    l = cf.partial_sums
    F = lambda terms: _f_terms(tuple(terms), big_n)  # noqa: E731
    y = lambda i: MultiLaurent.y(i, big_n)  # noqa: E731
    one = MultiLaurent.const(1, big_n)
    lhs = F(a)
    head, last = a[:-1], a[-1]
    out = {}

    if n >= 2 or last >= 3:
        alt = cf_expand(cf_value(cf), "alternate")
        out["alternate"] = (F(alt.terms), lhs)

    if n % 2 == 1:
        out["one_step_odd"] = (lhs, F(head) + y(big_n) * F(head + (last - 1,)))
    else:
        out["one_step_even"] = (lhs, _y_range(l[n - 1], big_n, big_n) * F(head) + F(head + (last - 1,)))

    if n % 2 == 1:
        if last == 2 and n >= 3:
            out["two_step_odd_a2_via_n1"] = (
                lhs, (one + y(big_n)) * F(head) + _y_range(l[n - 2], big_n, big_n) * F(a[:-2]))
            out["two_step_odd_a2_via_1"] = (
                lhs, (one + y(big_n)) * F(head + (1,)) - _y_range(l[n - 2], big_n - 1, big_n) * F(a[:-2]))
        if last >= 3:
            out["two_step_odd_12"] = (
                lhs, (one + y(big_n)) * F(head + (last - 1,)) - y(big_n - 1) * F(head + (last - 2,)))
            out["two_step_odd_2n1"] = (
                lhs, (one + y(big_n)) * F(head) + y(big_n - 1) * y(big_n) * F(head + (last - 2,)))
    else:
        out["two_step_even_12"] = (
            lhs, (one + y(big_n)) * F(head + (last - 1,)) - y(big_n) * F(head + (last - 2,)))
        out["two_step_even_2n1"] = (
            lhs, _y_range(l[n - 1], big_n - 1, big_n) * (one + y(big_n)) * F(head) + F(head + (last - 2,)))
    return out


def f_recursion_check(cf: ContinuedFraction) -> bool:
    return all(lhs == rhs for lhs, rhs in recursion_identities(cf).values())


def mirror_f_check(cf: ContinuedFraction) -> bool:
    """``F_{(q-p)/q} == y_1...y_N * F_{p/q}(y -> 1/y)``."""
    f = f_polynomial(build(cf))
    g = f_polynomial(build(mirror(cf)))
    n = f.nvars
    return g == _y_range(1, n, n) * f.invert_y()
