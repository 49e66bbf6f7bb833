"""Deterministic SVG 1.1 export of a :class:`Scene`.

Fixed 800x600 canvas. Data bounds, widened by 5% on every side, are mapped
onto the whole canvas (y pointing up). Curves become ``<polyline>``, points
3px ``<circle>`` elements and metric ellipses ``<polygon>`` elements, so
element counts are easy to audit. Identical scenes give identical bytes.
"""

from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import escape, quoteattr

import numpy as np

from bregkern.report.scene import Scene

WIDTH = 800
HEIGHT = 600
MARGIN = 0.05
POINT_RADIUS = 3
TICKS = 5


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _label(v: float) -> str:
    s = f"{v:.4g}"
    return "0" if s == "-0" else s


class _Mapping:
    def __init__(self, lo, hi):
        lo = np.asarray(lo, dtype=float).copy()
        hi = np.asarray(hi, dtype=float).copy()
        for k in range(2):
            if hi[k] - lo[k] <= 1e-12 * max(1.0, abs(lo[k]), abs(hi[k])):
                half = max(1.0, abs(lo[k])) * 0.5
                mid = 0.5 * (lo[k] + hi[k])
                lo[k], hi[k] = mid - half, mid + half
        span = hi - lo
        self.lo = lo - MARGIN * span
        self.hi = hi + MARGIN * span

    def __call__(self, xy):
        xy = np.atleast_2d(xy)
        x = (xy[:, 0] - self.lo[0]) / (self.hi[0] - self.lo[0]) * WIDTH
        y = HEIGHT - (xy[:, 1] - self.lo[1]) / (self.hi[1] - self.lo[1]) * HEIGHT
        return np.stack([x, y], axis=1)


def _points_attr(pix) -> str:
    return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pix)


def _style_attrs(style, fill: bool) -> str:
    if fill:
        return f'fill="{style.color}" fill-opacity="{style.opacity:g}" stroke="none"'
    return f'fill="none" stroke="{style.color}" stroke-opacity="{style.opacity:g}" stroke-width="1.5"'


def render_svg(scene: Scene) -> str:
    lo, hi = scene.bounds()
    to_px = _Mapping(lo, hi)
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
    ]
    if scene.title:
        out.append(f"<title>{escape(scene.title)}</title>")
    out.append('<rect x="0" y="0" width="800" height="600" fill="white"/>')

    # axes along the bottom and left edges with tick labels
    out.append('<g class="axes" stroke="black" stroke-width="1">')
    out.append(f'<line x1="0" y1="{HEIGHT}" x2="{WIDTH}" y2="{HEIGHT}"/>')
    out.append(f'<line x1="0" y1="0" x2="0" y2="{HEIGHT}"/>')
    out.append("</g>")
    out.append('<g class="ticks" font-family="sans-serif" font-size="10" fill="black">')
    for k in range(1, TICKS):
        fx = to_px.lo[0] + (to_px.hi[0] - to_px.lo[0]) * k / TICKS
        fy = to_px.lo[1] + (to_px.hi[1] - to_px.lo[1]) * k / TICKS
        px = WIDTH * k / TICKS
        py = HEIGHT - HEIGHT * k / TICKS
        out.append(f'<text x="{_fmt(px)}" y="{HEIGHT - 4}" text-anchor="middle">{_label(fx)}</text>')
        out.append(f'<text x="4" y="{_fmt(py)}">{_label(fy)}</text>')
    xlab, ylab = scene.axis_labels
    if xlab:
        out.append(f'<text x="{WIDTH - 4}" y="{HEIGHT - 16}" text-anchor="end">{escape(xlab)}</text>')
    if ylab:
        out.append(f'<text x="16" y="14">{escape(ylab)}</text>')
    out.append("</g>")

    for e in scene.ellipses:
        out.append(
            f'<polygon class="tissot" points="{_points_attr(to_px(e.boundary()))}" {_style_attrs(e.style, False)}/>'
        )
    for line in scene.polylines:
        out.append(
            f'<polyline class={quoteattr(line.kind)} points="{_points_attr(to_px(line.xy))}" '
            f"{_style_attrs(line.style, False)}/>"
        )
    for pt in scene.points:
        (x, y), = to_px(pt.xy)
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{POINT_RADIUS}" {_style_attrs(pt.style, True)}/>')

    labelled = [d.style for d in (*scene.points, *scene.polylines, *scene.ellipses) if d.style.label]
    if labelled:
        out.append('<g class="legend" font-family="sans-serif" font-size="11">')
        for row, style in enumerate(labelled):
            y = 14 + 16 * row
            out.append(f'<rect x="{WIDTH - 190}" y="{y - 8}" width="10" height="10" fill="{style.color}"/>')
            out.append(f'<text x="{WIDTH - 175}" y="{y + 1}">{escape(style.label)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def export_scene(scene: Scene, path) -> Path:
    path = Path(path)
    path.write_text(render_svg(scene), encoding="utf-8", newline="\n")
    return path
