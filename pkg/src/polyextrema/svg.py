"""Static SVG drawings of polygons.

The polygon is drawn exactly as given: self-crossings stay visible and
coincident vertices are not merged.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

import numpy as np

from polyextrema import geometry
from polyextrema.geometry import Polygon


@dataclass(frozen=True)
class RenderOptions:
    unit_circle: bool = False
    labels: bool = True
    caption: bool = True
    size: int = 480
    margin: int = 36
    stroke: str = "#1f4e79"


def caption_text(p: Polygon) -> str:
    m = geometry.metric_summary(p)
    return (f"perimeter = {m.perimeter:.6g}   Σd = {m.sum_distances:.6g}   "
            f"Σd² = {m.sum_squared_distances:.6g}")


def render_svg(p: Polygon, options: RenderOptions | None = None) -> str:
    o = options or RenderOptions()
    V = p.vertices
    lo = V.min(axis=0)
    hi = V.max(axis=0)
    if o.unit_circle:
        lo = np.minimum(lo, -1.0)
        hi = np.maximum(hi, 1.0)
    span = float(max(hi[0] - lo[0], hi[1] - lo[1], 1e-12))
    scale = (o.size - 2 * o.margin) / span
    mid = (lo + hi) / 2.0
    cap_h = 28 if o.caption else 0
    width, height = o.size, o.size + cap_h

    def to_px(x, y):
        return (o.size / 2 + (x - mid[0]) * scale, o.size / 2 - (y - mid[1]) * scale)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">',
           f'<rect width="{width}" height="{height}" fill="white"/>']
    if o.unit_circle:
        cx, cy = to_px(0.0, 0.0)
        out.append(f'<circle class="unit-circle" cx="{cx:.3f}" cy="{cy:.3f}" r="{scale:.3f}" '
                   'fill="none" stroke="#999999" stroke-dasharray="4 3"/>')
    pts = [to_px(x, y) for x, y in V]
    d = "M " + " L ".join(f"{x:.3f} {y:.3f}" for x, y in pts) + " Z"
    out.append(f'<path class="polygon" d="{d}" fill="none" stroke="{o.stroke}" '
               'stroke-width="1.5" stroke-linejoin="round"/>')
    for x, y in pts:
        out.append(f'<circle class="vertex" cx="{x:.3f}" cy="{y:.3f}" r="2.5" fill="{o.stroke}"/>')
    if o.labels:
        c = to_px(*V.mean(axis=0))
        for i, (x, y) in enumerate(pts, start=1):
            # push each label away from the vertex centroid
            dx, dy = x - c[0], y - c[1]
            r = max(np.hypot(dx, dy), 1e-9)
            lx, ly = x + 12 * dx / r, y + 12 * dy / r + 4
            out.append(f'<text class="vertex-label" x="{lx:.3f}" y="{ly:.3f}" font-size="13" '
                       f'font-family="serif" text-anchor="middle">A<tspan baseline-shift="sub" '
                       f'font-size="9">{i}</tspan></text>')
    if o.caption:
        out.append(f'<text class="caption" x="{width / 2:.1f}" y="{o.size + 14}" font-size="13" '
                   f'font-family="sans-serif" text-anchor="middle">{escape(caption_text(p))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(p: Polygon, path, options: RenderOptions | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(p, options))
