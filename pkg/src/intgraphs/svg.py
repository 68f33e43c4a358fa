"""SVG drawings of point sets and hyperbola families.

This is the only module that uses floating point; coordinates are written
in Euclidean units with the y axis flipped by a group transform.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

from .chart import HyperbolaSpec, PointSet, QuadPoint

_HEADER = (
    '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
    '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
    'width="{w}" height="{h}" viewBox="{x0} {y0} {vw} {vh}">\n'
)


def _f(v: float) -> str:
    if v == 0:
        v = 0.0  # no "-0"
    return format(v, ".12g")


def _hyperbola_polylines(h: HyperbolaSpec, extent: float, samples: int = 200) -> list[list[tuple[float, float]]]:
    (x1, y1), (x2, y2) = h.focus1.embedded(), h.focus2.embedded()
    cx, cy = (x1 + x2) / 2, (y1 + y2) / 2
    f = math.hypot(x2 - x1, y2 - y1)
    ux, uy = (x2 - x1) / f, (y2 - y1) / f
    nx, ny = -uy, ux
    a = float(h.diff) / 2
    c = f / 2

    def place(s, t):
        return cx + s * ux + t * nx, cy + s * uy + t * ny

    if a == 0:
        return [[place(0, -extent), place(0, extent)]]
    if h.diff ** 2 == h.focal_dist2:
        return [[place(c, 0), place(c + extent, 0)], [place(-c, 0), place(-c - extent, 0)]]
    b = math.sqrt(c * c - a * a)
    tmax = math.asinh(extent / b)
    lines = []
    for sgn in (1, -1):
        pts = []
        for i in range(samples + 1):
            t = -tmax + 2 * tmax * i / samples
            pts.append(place(sgn * a * math.cosh(t), b * math.sinh(t)))
        lines.append(pts)
    return lines


def render_svg(
    points: Optional[PointSet] = None,
    hyperbolas: Sequence[HyperbolaSpec] = (),
    labels: Optional[dict[QuadPoint, str]] = None,
    size: int = 600,
) -> str:
    labels = labels or {}
    emb = [p.embedded() for p in points] if points is not None else []
    foci = []
    for h in hyperbolas:
        for p in (h.focus1, h.focus2):
            if p not in foci:
                foci.append(p)
    anchors = emb + [p.embedded() for p in foci] + [p.embedded() for p in labels]
    if anchors:
        xs = [x for x, _ in anchors]
        ys = [y for _, y in anchors]
        span = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
        pad = 0.15 * span
        x0, x1 = min(xs) - pad, max(xs) + pad
        y0, y1 = min(ys) - pad, max(ys) + pad
    else:
        x0, x1, y0, y1 = -1.0, 1.0, -1.0, 1.0
    vw, vh = x1 - x0, y1 - y0
    r = max(vw, vh) / 150
    out = [_HEADER.format(w=size, h=size, x0=_f(x0), y0=_f(-y1), vw=_f(vw), vh=_f(vh))]
    out.append('<g transform="scale(1,-1)">\n')
    extent = 2 * max(vw, vh)
    for h in hyperbolas:
        for line in _hyperbola_polylines(h, extent):
            pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in line)
            out.append(
                f'<polyline points="{pts}" fill="none" stroke="#4477aa" stroke-width="{_f(r / 3)}"/>\n'
            )
    for x, y in emb:
        out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(r)}" fill="#000000"/>\n')
    for i, p in enumerate(foci, 1):
        x, y = p.embedded()
        out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(1.5 * r)}" fill="#cc3311"/>\n')
    out.append("</g>\n")
    named = list(labels.items()) + [(p, f"F{i}") for i, p in enumerate(foci, 1) if p not in labels]
    for p, text in named:
        x, y = p.embedded()
        out.append(
            f'<text x="{_f(x + r)}" y="{_f(-y - r)}" font-size="{_f(4 * r)}">{text}</text>\n'
        )
    out.append("</svg>\n")
    return "".join(out)
