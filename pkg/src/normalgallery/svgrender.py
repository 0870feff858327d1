"""Deterministic SVG drawings of galleries, views, decompositions and witnesses.

Walls are solid, windows dashed, sink regions shaded, witness sites starred
and the uncovered point circled.  The output is byte-identical across runs
for identical inputs: everything is emitted in a fixed order with fixed
number formatting.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

from .decomposition import GuardSiteSet, VisibilityDecomposition
from .geometry import Point
from .normality import NormalityReport
from .polygon import SimplePolygon
from .visibility import View

_MARGIN = 0.6


def _f(v) -> str:
    return f"{float(v):.3f}"


class SvgCanvas:
    def __init__(self, poly: SimplePolygon, scale: int = 60):
        xmin, ymin, xmax, ymax = poly.bbox()
        self.xmin = float(xmin) - _MARGIN
        self.ymax = float(ymax) + _MARGIN
        self.scale = scale
        width = (float(xmax) - float(xmin) + 2 * _MARGIN) * scale
        height = (float(ymax) - float(ymin) + 2 * _MARGIN) * scale
        self.parts: List[str] = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(width)}" '
            f'height="{_f(height)}" viewBox="0 0 {_f(width)} {_f(height)}">'
        ]

    def map(self, p: Point) -> str:
        x = (float(p.x) - self.xmin) * self.scale
        y = (self.ymax - float(p.y)) * self.scale
        return f"{_f(x)},{_f(y)}"

    def polygon(self, pts: Sequence[Point], fill: str, stroke: str,
                width: float = 2.0, dashed: bool = False, opacity: str = "1"):
        path = " ".join(self.map(p) for p in pts)
        dash = ' stroke-dasharray="7,5"' if dashed else ""
        self.parts.append(
            f'<polygon points="{path}" fill="{fill}" fill-opacity="{opacity}" '
            f'stroke="{stroke}" stroke-width="{_f(width)}"{dash}/>')

    def line(self, a: Point, b: Point, stroke: str, width: float = 1.5,
             dashed: bool = True):
        dash = ' stroke-dasharray="7,5"' if dashed else ""
        xa, ya = self.map(a).split(",")
        xb, yb = self.map(b).split(",")
        self.parts.append(
            f'<line x1="{xa}" y1="{ya}" x2="{xb}" y2="{yb}" '
            f'stroke="{stroke}" stroke-width="{_f(width)}"{dash}/>')

    def dot(self, p: Point, color: str, r: float = 4.0):
        x, y = self.map(p).split(",")
        self.parts.append(f'<circle cx="{x}" cy="{y}" r="{_f(r)}" fill="{color}"/>')

    def ring(self, p: Point, color: str, r: float = 7.0):
        x, y = self.map(p).split(",")
        self.parts.append(
            f'<circle cx="{x}" cy="{y}" r="{_f(r)}" fill="none" '
            f'stroke="{color}" stroke-width="2.0"/>')

    def star(self, p: Point, color: str):
        x, y = self.map(p).split(",")
        self.parts.append(
            f'<text x="{x}" y="{y}" fill="{color}" font-size="18" '
            f'text-anchor="middle" dominant-baseline="middle">*</text>')

    def label(self, p: Point, text: str, color: str = "#333333"):
        x, y = self.map(p).split(",")
        self.parts.append(
            f'<text x="{x}" y="{y}" fill="{color}" font-size="11" '
            f'text-anchor="middle">{text}</text>')

    def render(self) -> str:
        return "\n".join(self.parts + ["</svg>"]) + "\n"


def render_gallery(poly: SimplePolygon, sites: Optional[GuardSiteSet] = None) -> str:
    canvas = SvgCanvas(poly)
    canvas.polygon(poly.vertices, fill="#f8f8f2", stroke="#222222")
    if sites is not None:
        for name, q in zip(sites.names, sites.points):
            canvas.dot(q, "#1f66a8")
            canvas.label(Point(q.x, q.y + Fraction(1, 5)), name)
    return canvas.render()


def render_view(poly: SimplePolygon, view: View) -> str:
    canvas = SvgCanvas(poly)
    canvas.polygon(poly.vertices, fill="#f8f8f2", stroke="#222222")
    canvas.polygon(view.polygon.vertices, fill="#ffd76e", stroke="#b8860b",
                   width=1.0, opacity="0.6")
    canvas.dot(view.site, "#b8860b")
    return canvas.render()


def render_decomposition(dec: VisibilityDecomposition,
                         sinks: Optional[Sequence[int]] = None,
                         witness: Optional[NormalityReport] = None) -> str:
    canvas = SvgCanvas(dec.poly)
    canvas.polygon(dec.poly.vertices, fill="#f8f8f2", stroke="#222222")
    sink_set = set(sinks or ())
    for region in dec.regions:
        if region.id in sink_set:
            for trap in region.trapezoids:
                canvas.polygon(dec.cells.trap_corners(trap), fill="#f4a0a0",
                               stroke="none", width=0.0, opacity="0.55")
    for w in dec.windows:
        canvas.line(w.base, w.tip, "#666666")
    for region in dec.regions:
        hidden = sorted(dec.sites.names[i] for i in range(len(dec.sites))
                        if i not in region.visible)
        tag = "H{%s}" % ",".join(hidden) if hidden else "H{}"
        canvas.label(region.representative, tag, color="#7a3030")
    for name, q in zip(dec.sites.names, dec.sites.points):
        canvas.dot(q, "#1f66a8", r=3.0)
        canvas.label(Point(q.x, q.y + Fraction(1, 5)), name, color="#1f66a8")
    if witness is not None and witness.witness is not None:
        for q in witness.witness.points:
            canvas.star(q, "#c01010")
        canvas.ring(witness.witness.uncovered_point, "#c01010")
    return canvas.render()
