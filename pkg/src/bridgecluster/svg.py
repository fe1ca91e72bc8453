"""Static SVG 1.1 rendering of an ancestral triangle.

Output depends only on the input, so files can be compared byte for byte.
"""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .paths import Path
from .triangle import RIGHT, AncestralTriangle

WIDTH = 480
HEIGHT = 420
MARGIN = 40

FILL = {RIGHT: "#dce9f7", "L": "#f7e6d0"}
PATH_COLOUR = "#c0392b"
SEIFERT_COLOUR = "#1e6b2f"


def _fmt(v: Fraction | float) -> str:
    text = f"{float(v):.2f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def _point(c: tuple[Fraction, Fraction]) -> tuple[str, str]:
    x = MARGIN + c[0] * (WIDTH - 2 * MARGIN)
    y = HEIGHT - MARGIN - c[1] * (HEIGHT - 2 * MARGIN)
    return _fmt(x), _fmt(y)


def render(at: AncestralTriangle, path: Path | None = None, seifert: Path | None = None,
           title: str | None = None) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<title>{escape(title or f'AT({at.value})')}</title>",
        '<g id="triangles" stroke="#333333" stroke-width="1" stroke-linejoin="round">',
    ]
    for t in at.triangles:
        pts = " ".join(",".join(_point(at.vertices[v].coord)) for v in t.vertices)
        lines.append(f'<polygon id="T{t.index}" points="{pts}" fill="{FILL[t.orientation]}"/>')
    lines.append("</g>")

    lines.append('<g id="triangle-indices" font-family="sans-serif" font-size="10" fill="#555555" '
                 'text-anchor="middle">')
    for t in at.triangles:
        x, y = _point(at.centroid(t.index))
        lines.append(f'<text x="{x}" y="{y}">T{t.index}</text>')
    lines.append("</g>")

    for name, overlay, colour in (("path", path, PATH_COLOUR), ("seifert-path", seifert, SEIFERT_COLOUR)):
        if overlay is None:
            continue
        lines.append(f'<g id="{name}" stroke="{colour}" stroke-width="3" stroke-linecap="round">')
        for a, b in overlay.edges():
            (x1, y1), (x2, y2) = _point(at.vertices[a].coord), _point(at.vertices[b].coord)
            lines.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                         f'data-edge="{at.label(a)}-{at.label(b)}"/>')
        lines.append("</g>")

    lines.append('<g id="labels" font-family="sans-serif" font-size="12" fill="#000000">')
    for v in at.vertices:
        x, y = _point(v.coord)
        if v.id == at.apex:
            anchor, dy = "middle", -8
        elif v.coord[1] == 0:
            anchor, dy = "middle", 16
        elif v.coord[0] < Fraction(1, 2):
            anchor, dy = "end", 4
        else:
            anchor, dy = "start", 4
        dx = {"end": -6, "start": 6, "middle": 0}[anchor]
        lines.append(f'<text x="{x}" y="{y}" dx="{dx}" dy="{dy}" text-anchor="{anchor}">{v.label}</text>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
