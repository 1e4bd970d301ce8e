"""SVG drawing of planar polytropes."""

from __future__ import annotations

from .errors import UnsupportedDimension
from .oracle import order_polygon_2d
from .polytrope import Polytrope, is_degenerate
from .pseudovertex import enumerate_pseudovertices


def _f(x) -> str:
    return f"{float(x):.6g}"


def render_svg_2d(p: Polytrope, size: int = 400) -> str:
    """Polygon through the pseudovertices, tropical vertices drawn in red.

    Output is byte-for-byte deterministic for a given polytrope.
    """
    if p.dim != 2:
        raise UnsupportedDimension(f"render needs d = 2, got {p.dim}")
    if is_degenerate(p):
        raise UnsupportedDimension("cannot render a degenerate (zero-area) polytrope")
    pts = [v.point for v in enumerate_pseudovertices(p)]
    ring = order_polygon_2d(pts)
    tv = set(p.tropical_vertices())

    xs = [x for x, _ in pts]
    ys = [-y for _, y in pts]  # SVG y axis points down
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    pad = max(x1 - x0, y1 - y0) / 10
    vb = (x0 - pad, y0 - pad, x1 - x0 + 2 * pad, y1 - y0 + 2 * pad)
    r = max(vb[2], vb[3]) / 80
    stroke = r / 2

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="{" ".join(_f(v) for v in vb)}">',
        f'  <polygon points="{" ".join(f"{_f(x)},{_f(-y)}" for x, y in ring)}" '
        f'fill="#dde8f4" stroke="#1f3b5a" stroke-width="{_f(stroke)}"/>',
    ]
    for x, y in ring:
        colour = "#c0392b" if (x, y) in tv else "#1f3b5a"
        rad = r * 1.6 if (x, y) in tv else r
        out.append(f'  <circle cx="{_f(x)}" cy="{_f(-y)}" r="{_f(rad)}" fill="{colour}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
