"""Tiny parser for hand-written polynomials such as ``"y1y2y5x2/x1x3x4x6"``."""

import re

from bridgecluster.poly import MultiLaurent

_FACTOR = re.compile(r"([xy])(\d+)(?:\^(\d+))?")


def _exps(text, sign, x, y):
    for var, idx, power in _FACTOR.findall(text):
        target = x if var == "x" else y
        target[int(idx)] = target.get(int(idx), 0) + sign * int(power or 1)


def mono(text: str, n: int) -> MultiLaurent:
    text = text.replace(" ", "")
    coef = 1
    m = re.match(r"^(\d+)", text)
    if m:
        coef = int(m.group(1))
        text = text[m.end():]
    num, _, den = text.partition("/")
    x, y = {}, {}
    _exps(num, 1, x, y)
    _exps(den, -1, x, y)
    return MultiLaurent.monomial(n, x=x, y=y, coef=coef)


def poly(text: str, n: int) -> MultiLaurent:
    """Sum of monomials separated by ``+``; ``1`` is the constant."""
    total = MultiLaurent(n)
    for part in text.split("+"):
        total = total + mono(part.strip(), n)
    return total
