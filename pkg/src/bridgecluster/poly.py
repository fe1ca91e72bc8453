"""Exact Laurent polynomials over the integers.

``MultiLaurent`` lives in ``Z[x_1^{+-1}, ..., x_N^{+-1}, y_1^{+-1}, ..., y_N^{+-1}]``
with dense exponent vectors ``(x_1..x_N, y_1..y_N)``.  Cluster variables only
ever carry nonnegative y-exponents; that is checked by the caller, not here.

``HalfLaurent`` is a Laurent polynomial in ``u = t^{1/2}``; powers are stored
as u-exponents so half-integral t-powers stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import InexactDivisionError


class MultiLaurent:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            if len(exp) != 2 * nvars:
                raise ValueError(f"exponent {exp} has wrong length for N={nvars}")
            if c:
                clean[tuple(exp)] = int(c)
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, c: int, nvars: int) -> MultiLaurent:
        return cls(nvars, {(0,) * (2 * nvars): c})

    @classmethod
    def monomial(cls, nvars: int, x: Mapping[int, int] | None = None,
                 y: Mapping[int, int] | None = None, coef: int = 1) -> MultiLaurent:
        """Monomial from 1-based ``{index: exponent}`` maps for x and y."""
        exp = [0] * (2 * nvars)
        for i, e in (x or {}).items():
            if not 1 <= i <= nvars:
                raise IndexError(f"x_{i} out of range for N={nvars}")
            exp[i - 1] += e
        for i, e in (y or {}).items():
            if not 1 <= i <= nvars:
                raise IndexError(f"y_{i} out of range for N={nvars}")
            exp[nvars + i - 1] += e
        return cls(nvars, {tuple(exp): coef})

    @classmethod
    def x(cls, i: int, nvars: int) -> MultiLaurent:
        return cls.monomial(nvars, x={i: 1})

    @classmethod
    def y(cls, i: int, nvars: int) -> MultiLaurent:
        return cls.monomial(nvars, y={i: 1})

    # -- ring operations ----------------------------------------------

    def _coerce(self, other) -> MultiLaurent:
        if isinstance(other, MultiLaurent):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return MultiLaurent.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiLaurent(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiLaurent(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiLaurent(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise InexactDivisionError(f"{c} is not a unit")
            return MultiLaurent(self.nvars, {tuple(k * a for a in e): c ** (-k)})
        result = MultiLaurent.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiLaurent.const(other, self.nvars)
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def div_exact(self, other: MultiLaurent) -> MultiLaurent:
        """Exact quotient in the Laurent ring; raises if ``other`` does not divide."""
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return MultiLaurent(self.nvars)
        if other.is_monomial():
            (eb, cb), = other.terms.items()
            out = {}
            for e, c in self.terms.items():
                if c % cb:
                    raise InexactDivisionError(f"coefficient {c} not divisible by {cb}")
                out[tuple(a - b for a, b in zip(e, eb))] = c // cb
            return MultiLaurent(self.nvars, out)

        # Lex order on Z^m is a group order, so leading terms multiply.  An exact
        # quotient has every exponent inside the box [min_a - min_b, max_a - max_b],
        # which bounds the loop when the division is not exact.
        m = 2 * self.nvars
        lo = [min(e[j] for e in self.terms) - min(e[j] for e in other.terms) for j in range(m)]
        hi = [max(e[j] for e in self.terms) - max(e[j] for e in other.terms) for j in range(m)]
        lead_b = max(other.terms)
        cb = other.terms[lead_b]
        rem = dict(self.terms)
        quotient: dict[tuple[int, ...], int] = {}
        while rem:
            lt = max(rem)
            c = rem[lt]
            qe = tuple(a - b for a, b in zip(lt, lead_b))
            if c % cb or any(not lo[j] <= qe[j] <= hi[j] for j in range(m)):
                raise InexactDivisionError("polynomial division is not exact")
            qc = c // cb
            quotient[qe] = qc
            for e, cc in other.terms.items():
                key = tuple(a + b for a, b in zip(e, qe))
                v = rem.get(key, 0) - qc * cc
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return MultiLaurent(self.nvars, quotient)

    # -- structure ----------------------------------------------------

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_x_free(self) -> bool:
        n = self.nvars
        return all(not any(e[:n]) for e in self.terms)

    def min_y_exponent(self) -> int:
        n = self.nvars
        return min((min(e[n:], default=0) for e in self.terms), default=0)

    def x_exponents(self, exp: tuple[int, ...]) -> tuple[int, ...]:
        return exp[: self.nvars]

    def y_exponents(self, exp: tuple[int, ...]) -> tuple[int, ...]:
        return exp[self.nvars:]

    def denominator(self) -> MultiLaurent:
        """Least common x-monomial denominator: ``prod x_j^{-e}`` over the most
        negative exponent ``e`` of each x_j."""
        exp = [0] * (2 * self.nvars)
        for e in self.terms:
            for j, a in enumerate(e[: self.nvars]):
                if a < 0:
                    exp[j] = max(exp[j], -a)
        return MultiLaurent(self.nvars, {tuple(exp): 1})

    def set_x_to_one(self) -> MultiLaurent:
        n = self.nvars
        out: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            key = (0,) * n + e[n:]
            out[key] = out.get(key, 0) + c
        return MultiLaurent(n, out)

    def invert_y(self) -> MultiLaurent:
        """Substitute ``y_i -> y_i^{-1}`` for every i."""
        n = self.nvars
        return MultiLaurent(n, {e[:n] + tuple(-a for a in e[n:]): c for e, c in self.terms.items()})

    def embed(self, nvars: int) -> MultiLaurent:
        """Same polynomial viewed with ``nvars >= self.nvars`` variables."""
        if nvars < self.nvars:
            n = self.nvars
            for e in self.terms:
                if any(e[nvars:n]) or any(e[n + nvars:]):
                    raise ValueError(f"polynomial uses variables beyond index {nvars}")
            return MultiLaurent(nvars, {e[:nvars] + e[n:n + nvars]: c for e, c in self.terms.items()})
        pad = (0,) * (nvars - self.nvars)
        n = self.nvars
        return MultiLaurent(nvars, {e[:n] + pad + e[n:] + pad: c for e, c in self.terms.items()})

    def evaluate(self, x: Sequence[int] | None = None, y: Sequence[int] | None = None):
        """Evaluate at rational points (``None`` means all ones)."""
        from fractions import Fraction

        n = self.nvars
        point = list(x or [1] * n) + list(y or [1] * n)
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, a in zip(point, e):
                if a:
                    term *= Fraction(v) ** a
            total += term
        return total

    # -- printing -----------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        n = self.nvars
        return sorted(self.terms.items(), key=lambda ec: (ec[0][n:], ec[0][:n]))

    def var_names(self) -> list[str]:
        return [f"x{i}" for i in range(1, self.nvars + 1)] + [f"y{i}" for i in range(1, self.nvars + 1)]

    def _monomial_text(self, exp, latex=False) -> str:
        n = self.nvars
        # y's first, then x's, the way cluster variables are usually written
        order = list(range(n, 2 * n)) + list(range(n))
        parts = []
        for j in order:
            a = exp[j]
            if not a:
                continue
            name = ("y" if j >= n else "x") + (f"_{{{j % n + 1}}}" if latex else str(j % n + 1))
            if a == 1:
                parts.append(name)
            elif latex:
                parts.append(f"{name}^{{{a}}}")
            else:
                parts.append(f"{name}^{a}")
        return ("" if latex else "*").join(parts)

    def to_text(self, latex: bool = False) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = self._monomial_text(e, latex)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'' if latex else '*'}{mono}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def to_fraction_text(self, latex: bool = False) -> str:
        """``numerator / denominator`` with a monomial x-denominator."""
        den = self.denominator()
        if all(a == 0 for a in next(iter(den.terms))):
            return self.to_text(latex)
        num = self * den
        if latex:
            return f"\\frac{{{num.to_text(True)}}}{{{den.to_text(True)}}}"
        den_text = den.to_text()
        if "*" in den_text:
            den_text = f"({den_text})"
        num_text = num.to_text()
        if len(num) > 1:
            num_text = f"({num_text})"
        return f"{num_text}/{den_text}"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiLaurent({self.nvars}, {self.to_text()!r})"

    def to_json(self) -> dict:
        return {
            "vars": self.var_names(),
            "terms": [{"coef": str(c), "exp": list(e)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> MultiLaurent:
        names = list(data["vars"])
        if len(names) % 2:
            raise ValueError("vars must list x_1..x_N then y_1..y_N")
        n = len(names) // 2
        return cls(n, {tuple(t["exp"]): int(t["coef"]) for t in data["terms"]})


@dataclass(frozen=True)
class TropMonomial:
    """Element ``prod y_j^{a_j}`` of the tropical semifield; ``+`` is ``oplus``."""

    exps: tuple[int, ...]

    @classmethod
    def one(cls, n: int) -> TropMonomial:
        return cls((0,) * n)

    @classmethod
    def gen(cls, i: int, n: int) -> TropMonomial:
        e = [0] * n
        e[i - 1] = 1
        return cls(tuple(e))

    def __add__(self, other: TropMonomial) -> TropMonomial:
        return trop_add(self, other)

    def __mul__(self, other: TropMonomial) -> TropMonomial:
        return TropMonomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> TropMonomial:
        return TropMonomial(tuple(k * a for a in self.exps))

    def inverse(self) -> TropMonomial:
        return self ** -1

    def as_laurent(self) -> MultiLaurent:
        n = len(self.exps)
        return MultiLaurent(n, {(0,) * n + self.exps: 1})

    def __str__(self):
        parts = []
        for i, a in enumerate(self.exps, 1):
            if a == 1:
                parts.append(f"y{i}")
            elif a:
                parts.append(f"y{i}^{a}")
        return "*".join(parts) or "1"


def trop_add(a: TropMonomial, b: TropMonomial) -> TropMonomial:
    """Tropical sum: componentwise minimum of exponents."""
    if len(a.exps) != len(b.exps):
        raise ValueError("tropical monomials of different rank")
    return TropMonomial(tuple(min(s, t) for s, t in zip(a.exps, b.exps)))


class HalfLaurent:
    """Laurent polynomial in ``u = t^{1/2}``; keys are u-exponents."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self.terms = {int(k): int(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def from_t(cls, terms: Mapping[int, int]) -> HalfLaurent:
        """Build from integral t-exponents."""
        return cls({2 * k: c for k, c in terms.items()})

    @classmethod
    def const(cls, c: int) -> HalfLaurent:
        return cls({0: c})

    @classmethod
    def u_power(cls, k: int, coef: int = 1) -> HalfLaurent:
        return cls({k: coef})

    @classmethod
    def skein_factor(cls) -> HalfLaurent:
        """``t^{1/2} - t^{-1/2}``."""
        return cls({1: 1, -1: -1})

    def _coerce(self, other):
        if isinstance(other, HalfLaurent):
            return other
        if isinstance(other, int):
            return HalfLaurent.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return HalfLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return HalfLaurent({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return HalfLaurent(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = HalfLaurent.const(other)
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def shift(self, u_power: int) -> HalfLaurent:
        """Multiply by ``u^{u_power}``."""
        return HalfLaurent({k + u_power: c for k, c in self.terms.items()})

    def invert(self) -> HalfLaurent:
        """Substitute ``u -> u^{-1}``."""
        return HalfLaurent({-k: c for k, c in self.terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.invert()

    def has_integral_t_powers(self) -> bool:
        return all(k % 2 == 0 for k in self.terms)

    def evaluate_t(self, t):
        """Numeric value at ``t`` (``t > 0`` when half powers occur)."""
        return sum(c * t ** (k / 2) for k, c in self.terms.items())

    def to_text(self, latex: bool = False) -> str:
        if not self.terms:
            return "0"
        out = []
        for k in sorted(self.terms):
            c = self.terms[k]
            if k == 0:
                mono = ""
            else:
                if k % 2 == 0:
                    power = str(k // 2)
                else:
                    power = f"{k}/2"
                if power == "1":
                    mono = "t"
                elif latex:
                    mono = f"t^{{{power}}}"
                else:
                    mono = f"t^({power})" if ("/" in power or power.startswith("-")) else f"t^{power}"
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'' if latex else '*'}{mono}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"HalfLaurent({self.to_text()!r})"

    def to_json(self) -> dict:
        return {"var": "u", "u_equals": "t^(1/2)",
                "terms": [{"coef": str(self.terms[k]), "exp": k} for k in sorted(self.terms)]}

    @classmethod
    def from_json(cls, data: Mapping) -> HalfLaurent:
        return cls({int(t["exp"]): int(t["coef"]) for t in data["terms"]})


def signs_to_assignment(signs: Iterable[int]) -> list[tuple[int, int]]:
    """``y_i = -t^{e_i}`` as ``(sign, u-power)`` pairs."""
    return [(-1, 2 * e) for e in signs]


def specialize_y(f: MultiLaurent, assignment: Sequence[tuple[int, int]]) -> HalfLaurent:
    """Substitute ``y_i := sign_i * u^{k_i}`` into an x-free polynomial."""
    if not f.is_x_free():
        raise ValueError("specialize_y needs an x-free polynomial")
    n = f.nvars
    if len(assignment) != n:
        raise ValueError(f"need {n} assignments, got {len(assignment)}")
    out: dict[int, int] = {}
    for e, c in f.terms.items():
        power = 0
        for (sign, k), a in zip(assignment, e[n:]):
            if a:
                power += k * a
                if sign < 0 and a % 2:
                    c = -c
        out[power] = out.get(power, 0) + c
    return HalfLaurent(out)
