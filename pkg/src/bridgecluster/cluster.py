"""Seeds with principal coefficients and quiver mutation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .arith import ContinuedFraction
from .errors import LaurentPhenomenonError
from .poly import MultiLaurent, TropMonomial
from .triangle import RIGHT, AncestralTriangle, build


def _pos(v: int) -> int:
    return v if v > 0 else 0


def _sgn(v: int) -> int:
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class Quiver:
    """Quiver on vertices ``1..N`` stored as its skew-symmetric matrix."""

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        b = self.matrix
        n = len(b)
        for i in range(n):
            if len(b[i]) != n:
                raise ValueError("exchange matrix must be square")
            for j in range(n):
                if b[i][j] != -b[j][i]:
                    raise ValueError(f"matrix not skew-symmetric at ({i + 1}, {j + 1})")

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[tuple[int, int]]) -> Quiver:
        b = [[0] * n for _ in range(n)]
        for i, j in arrows:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            b[i - 1][j - 1] += 1
            b[j - 1][i - 1] -= 1
        return cls(tuple(map(tuple, b)))

    @property
    def n(self) -> int:
        return len(self.matrix)

    def b(self, i: int, j: int) -> int:
        return self.matrix[i - 1][j - 1]

    def arrows(self) -> list[tuple[int, int]]:
        """Arrow multiset ``i -> j`` (repeated ``b_ij`` times), sorted."""
        out = []
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                out.extend([(i, j)] * _pos(self.b(i, j)))
        return out

    def mutate(self, k: int) -> Quiver:
        n = self.n
        b = self.matrix
        k0 = k - 1
        new = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i == k0 or j == k0:
                    new[i][j] = -b[i][j]
                else:
                    new[i][j] = b[i][j] + _sgn(b[i][k0]) * _pos(b[i][k0] * b[k0][j])
        return Quiver(tuple(map(tuple, new)))

    def __str__(self):
        return ", ".join(f"{i}->{j}" for i, j in self.arrows()) or "(no arrows)"


@dataclass(frozen=True)
class Seed:
    x: tuple[MultiLaurent, ...]
    y: tuple[TropMonomial, ...]
    quiver: Quiver

    @classmethod
    def initial(cls, quiver: Quiver) -> Seed:
        n = quiver.n
        return cls(
            tuple(MultiLaurent.x(i, n) for i in range(1, n + 1)),
            tuple(TropMonomial.gen(i, n) for i in range(1, n + 1)),
            quiver,
        )

    @property
    def n(self) -> int:
        return self.quiver.n

    def mutate(self, k: int, check_laurent: bool = True) -> Seed:
        """Mutation in direction ``k`` (1-based)."""
        n = self.n
        if not 1 <= k <= n:
            raise IndexError(f"mutation direction {k} outside 1..{n}")
        q = self.quiver
        uk = self.y[k - 1]
        uk_plus = uk + TropMonomial.one(n)

        new_y = []
        for j in range(1, n + 1):
            if j == k:
                new_y.append(uk.inverse())
            else:
                bkj = q.b(k, j)
                new_y.append(self.y[j - 1] * uk ** _pos(bkj) * uk_plus ** (-bkj))

        one = MultiLaurent.const(1, n)
        in_prod, out_prod = one, one
        for i in range(1, n + 1):
            bik = q.b(i, k)
            if bik < 0:
                in_prod = in_prod * self.x[i - 1] ** (-bik)
            elif bik > 0:
                out_prod = out_prod * self.x[i - 1] ** bik
        numerator = in_prod + uk.as_laurent() * out_prod
        xk = numerator.div_exact(uk_plus.as_laurent() * self.x[k - 1])
        if check_laurent:
            check_laurent_phenomenon(xk, f"mutation at {k}")
        new_x = self.x[: k - 1] + (xk,) + self.x[k:]
        return Seed(new_x, tuple(new_y), q.mutate(k))

    def to_json(self) -> dict:
        return {
            "x": [v.to_json() for v in self.x],
            "y": [list(u.exps) for u in self.y],
            "arrows": [list(a) for a in self.quiver.arrows()],
        }


def check_laurent_phenomenon(x: MultiLaurent, where: str = "") -> None:
    """Integer coefficients are structural; y-exponents must be nonnegative."""
    if x.min_y_exponent() < 0:
        raise LaurentPhenomenonError(f"negative y-exponent {where}: {x}")


def initial_quiver(at: AncestralTriangle) -> Quiver:
    """Arrow ``i+1 -> i`` for a right ``T_i`` and ``i -> i+1`` for a left one."""
    arrows = []
    for i in range(1, at.N):
        if at.triangle(i).orientation == RIGHT:
            arrows.append((i + 1, i))
        else:
            arrows.append((i, i + 1))
    return Quiver.from_arrows(at.N, arrows)


def mutation_trace(cf: ContinuedFraction) -> list[Seed]:
    """Seeds ``mu_i ... mu_1`` of the initial seed for ``i = 0..N``."""
    seed = Seed.initial(initial_quiver(build(cf)))
    seeds = [seed]
    for k in range(1, seed.n + 1):
        seed = seed.mutate(k)
        seeds.append(seed)
    return seeds


def cluster_variable(cf: ContinuedFraction) -> MultiLaurent:
    final = mutation_trace(cf)[-1]
    return final.x[-1]


def f_from_cluster(x: MultiLaurent) -> MultiLaurent:
    return x.set_x_to_one()
