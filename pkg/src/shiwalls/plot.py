"""SVG drawings of the dominant chamber of the m-Shi arrangement for n = 3.

Planar layout: ``H_{alpha_2,0}`` is the horizontal axis, ``H_{alpha_1,0}``
leaves the origin at 60 degrees, and the ``theta`` translates are the
slanted family.  Geometry is computed exactly in the coordinates
``s = <x, alpha_1>``, ``t = <x, alpha_2>`` and only converted to pixels at
the end, so output is byte-stable.
"""
from __future__ import annotations

from fractions import Fraction
from math import sqrt

from .shi import RegionTableau, Root, enumerate_regions, is_separating_wall

SCALE = 60
MARGIN = 40
FILL = "#ffd84d"

# each root is a linear form on (s, t)
_FORMS = {Root(1, 1): (1, 0), Root(2, 2): (0, 1), Root(1, 2): (1, 1)}
_NAMES = {Root(1, 1): "α1", Root(2, 2): "α2", Root(1, 2): "θ"}


class UnsupportedDimension(ValueError):
    pass


def _clip(poly, a, b, c):
    """Keep the part of ``poly`` where ``a*s + b*t <= c``."""
    out = []
    for i, p in enumerate(poly):
        q = poly[(i + 1) % len(poly)]
        fp = a * p[0] + b * p[1] - c
        fq = a * q[0] + b * q[1] - c
        if fp <= 0:
            out.append(p)
        if (fp < 0 < fq) or (fq < 0 < fp):
            r = Fraction(fp, fp - fq)
            out.append((p[0] + r * (q[0] - p[0]), p[1] + r * (q[1] - p[1])))
    return out


def _area2(poly) -> Fraction:
    return sum(p[0] * q[1] - q[0] * p[1] for p, q in zip(poly, poly[1:] + poly[:1]))


def region_polygon(e: RegionTableau, extent: int):
    """Vertices of the region inside the triangle ``s, t >= 0, s + t <= extent``."""
    poly = [(Fraction(0), Fraction(0)), (Fraction(extent), Fraction(0)), (Fraction(0), Fraction(extent))]
    for root, (a, b) in _FORMS.items():
        k = e[root]
        poly = _clip(poly, -a, -b, -k)
        if k < e.m:
            poly = _clip(poly, a, b, k + 1)
    return poly


def _to_px(pt, extent: int) -> tuple[float, float]:
    s, t = pt
    y = float(t) * sqrt(3) / 2
    x = float(s) + float(t) / 2
    height = extent * sqrt(3) / 2
    return MARGIN + x * SCALE, MARGIN + (height - y) * SCALE


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_svg(n: int, m: int, root: Root | None = None) -> str:
    if n != 3:
        raise UnsupportedDimension(f"plotting is only supported for n = 3, got n = {n}")
    if root is not None:
        root = Root(*root).check(n)
    extent = 2 * m + 2
    width = 2 * MARGIN + extent * SCALE + 80
    height = 2 * MARGIN + extent * sqrt(3) / 2 * SCALE
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}" font-family="sans-serif" font-size="12">',
        f'<desc>dominant regions of the {m}-Shi arrangement, n = 3'
        + (f"; shaded: separating wall H({_NAMES[root]},{m})" if root else "") + "</desc>",
    ]
    for e in enumerate_regions(n, m):
        poly = region_polygon(e, extent)
        if _area2(poly) == 0:
            raise AssertionError(f"region {e.rows()} vanished inside the viewport")
        shaded = root is not None and is_separating_wall(e, root)
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (_to_px(p, extent) for p in poly))
        cls = "region shaded" if shaded else "region"
        fill = FILL if shaded else "none"
        lines.append(f'<polygon class="{cls}" points="{pts}" fill="{fill}" stroke="#bbbbbb" '
                     f'stroke-width="0.5"><title>e = {e.rows()}</title></polygon>')
    for r, (a, b) in _FORMS.items():
        for k in range(0, m + 1):
            if r == Root(1, 2) and k == 0:
                continue
            seg = _hyperplane_segment(a, b, k, extent)
            (x1, y1), (x2, y2) = (_to_px(p, extent) for p in seg)
            highlight = root is not None and r == root and k == m
            colour = "#d62728" if highlight else "#000000"
            lines.append(f'<line class="hyperplane" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
                         f'y2="{_fmt(y2)}" stroke="{colour}" stroke-width="2"/>')
            lx, ly = _label_anchor(r, (x1, y1), (x2, y2))
            lines.append(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}">H({_NAMES[r]},{k})</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _hyperplane_segment(a: int, b: int, k: int, extent: int):
    if (a, b) == (1, 0):
        return (k, 0), (k, extent - k)
    if (a, b) == (0, 1):
        return (0, k), (extent - k, k)
    return (k, 0), (0, k)


def _label_anchor(root, p1, p2):
    if root == Root(1, 2):
        return p1[0] - 8, p1[1] + 16
    return p2[0] + 4, p2[1] - 4
