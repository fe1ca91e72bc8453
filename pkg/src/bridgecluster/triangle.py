"""Ancestral triangles: the strip of mediant triangles attached to ``p/q``.

Triangles are stacked bottom-up.  The strip's current top edge is a pair
``(left, right)``; a right triangle replaces ``right`` by the mediant, a left
triangle replaces ``left``.  Fan 1 holds ``a_1 - 1`` right triangles, fan
``k >= 2`` holds ``a_k`` triangles, left for even ``k`` and right for odd.

Coordinates are exact: the strip is drawn inside the triangle with corners
``(0, 0)``, ``(1, 0)``, ``(1/2, 1)``.  The vertex created by ``T_i`` sits at
height ``i/N`` on the left or right side, and the apex at the top corner.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import ContinuedFraction, Parity, Ratio, mirror, parity

LEFT = "L"
RIGHT = "R"


@dataclass(frozen=True)
class Vertex:
    id: int
    label: Ratio
    coord: tuple[Fraction, Fraction]
    parents: tuple[int, int] | None  # (left, right) it is the mediant of


@dataclass(frozen=True)
class Triangle:
    index: int  # 1-based T_i
    left: int  # vertex ids of the edge the triangle is stacked on
    right: int
    new: int
    orientation: str
    fan: int
    pos: int  # 1-based position inside its fan, counted from the bottom

    @property
    def vertices(self) -> tuple[int, int, int]:
        return (self.left, self.right, self.new)

    def edges(self) -> list[frozenset[int]]:
        a, b, c = self.vertices
        return [frozenset((a, b)), frozenset((b, c)), frozenset((a, c))]


@dataclass(frozen=True)
class Fan:
    k: int
    triangles: tuple[int, ...]
    # Edge shared with the fan below (the base edge when fan 1 is empty);
    # fan 1 has none.
    bottom_edge: tuple[int, int] | None


@dataclass
class AncestralTriangle:
    cf: ContinuedFraction
    vertices: list[Vertex]
    triangles: list[Triangle]
    fans: list[Fan]
    apex: int
    base: tuple[int, int] = (0, 1)
    edge_triangles: dict[frozenset[int], list[int]] = field(default_factory=dict)

    @property
    def N(self) -> int:
        return len(self.triangles)

    @property
    def value(self) -> Ratio:
        return self.vertices[self.apex].label

    def label(self, v: int) -> Ratio:
        return self.vertices[v].label

    def triangle(self, i: int) -> Triangle:
        """1-based access, ``T_i``."""
        return self.triangles[i - 1]

    def fan_of(self, i: int) -> Fan:
        return self.fans[self.triangle(i).fan - 1]

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbours with smaller denominator, lower denominator first."""
        parents = self.vertices[v].parents
        if parents is None:
            return ()
        return tuple(sorted(parents, key=lambda w: (self.label(w).q, self.label(w).p)))

    def edges(self) -> list[tuple[int, int]]:
        """Directed edges ``(from, to)`` with ``denominator(from) > denominator(to)``."""
        out = []
        for e in sorted(self.edge_triangles, key=sorted):
            a, b = sorted(e)
            qa, qb = self.label(a).q, self.label(b).q
            if qa > qb:
                out.append((a, b))
            elif qb > qa:
                out.append((b, a))
        return out

    def right_chain(self) -> list[int]:
        """Right boundary from ``1/1`` up to (and including) the apex."""
        chain = [self.base[1]]
        for t in self.triangles:
            if t.orientation == RIGHT and t.new != self.apex:
                chain.append(t.new)
        chain.append(self.apex)
        return chain

    def left_chain(self) -> list[int]:
        chain = [self.base[0]]
        for t in self.triangles:
            if t.orientation == LEFT and t.new != self.apex:
                chain.append(t.new)
        chain.append(self.apex)
        return chain

    def find_vertex(self, label: Ratio | str) -> int:
        text = str(label)
        for v in self.vertices:
            if str(v.label) == text:
                return v.id
        raise KeyError(f"no vertex labelled {text}")

    def centroid(self, i: int) -> tuple[Fraction, Fraction]:
        pts = [self.vertices[v].coord for v in self.triangle(i).vertices]
        return (sum(p[0] for p in pts) / 3, sum(p[1] for p in pts) / 3)


def orientations(cf: ContinuedFraction) -> list[tuple[str, int, int]]:
    """``(orientation, fan, position)`` for ``T_1 .. T_N``."""
    out = []
    for k, a in enumerate(cf.terms, 1):
        count = a - 1 if k == 1 else a
        side = RIGHT if k % 2 == 1 else LEFT
        out.extend((side, k, i) for i in range(1, count + 1))
    return out


def build(cf: ContinuedFraction) -> AncestralTriangle:
    n_tri = cf.num_triangles
    if n_tri == 0:
        raise ValueError(f"{cf} evaluates to 1/1; no ancestral triangle")
    half = Fraction(1, 2)
    vertices = [
        Vertex(0, Ratio(0, 1), (Fraction(0), Fraction(0)), None),
        Vertex(1, Ratio(1, 1), (Fraction(1), Fraction(0)), None),
    ]
    triangles: list[Triangle] = []
    fan_members: dict[int, list[int]] = {k: [] for k in range(1, cf.n + 1)}
    bottoms: dict[int, tuple[int, int] | None] = {1: None}
    left, right = 0, 1
    for i, (side, k, pos) in enumerate(orientations(cf), 1):
        if pos == 1 and k >= 2:
            bottoms[k] = (left, right)
        label = vertices[left].label.mediant(vertices[right].label)
        h = Fraction(i, n_tri)
        if i == n_tri:
            coord = (half, Fraction(1))
        elif side == RIGHT:
            coord = (1 - h / 2, h)
        else:
            coord = (h / 2, h)
        vid = len(vertices)
        vertices.append(Vertex(vid, label, coord, (left, right)))
        triangles.append(Triangle(i, left, right, vid, side, k, pos))
        fan_members[k].append(i)
        if side == RIGHT:
            right = vid
        else:
            left = vid
    fans = [Fan(k, tuple(fan_members[k]), bottoms[k]) for k in range(1, cf.n + 1)]
    at = AncestralTriangle(cf, vertices, triangles, fans, apex=len(vertices) - 1)
    for t in triangles:
        for e in t.edges():
            at.edge_triangles.setdefault(e, []).append(t.index)
    return at


def mirror_structure_check(cf: ContinuedFraction) -> bool:
    """True iff ``AT((q-p)/q)`` is the mirror image of ``AT(p/q)``.

    Orientations must swap triangle by triangle and every label ``r/s`` must
    become ``(s-r)/s`` (with the two base labels exchanged).
    """
    at = build(cf)
    other = build(mirror(cf))
    if at.N != other.N:
        return False
    swap = {RIGHT: LEFT, LEFT: RIGHT}
    for t, u in zip(at.triangles, other.triangles):
        if swap[t.orientation] != u.orientation:
            return False
        if at.label(t.new).complement() != other.label(u.new):
            return False
        # stacked-on edge (left, right) maps to (right, left) in the mirror
        if at.label(t.left).complement() != other.label(u.right):
            return False
        if at.label(t.right).complement() != other.label(u.left):
            return False
    return True


def vertex_parities(at: AncestralTriangle) -> dict[int, Parity]:
    return {v.id: parity(v.label) for v in at.vertices}
