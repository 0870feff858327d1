"""Gallery file format: a small structured-text description.

    # comment lines start with '#'
    polygon = [(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]
    sites = {s: (4, 1), probe: (13/2, 9/2)}

Coordinates are decimals or exact fractions "p/q"; both parse to exact
rationals and serialisation always round-trips losslessly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .geometry import Point
from .polygon import SimplePolygon


class GalleryFormatError(ValueError):
    pass


_NUM = r"[+-]?\d+(?:\.\d+)?(?:\s*/\s*\d+)?"
_PAIR = re.compile(rf"\(\s*({_NUM})\s*,\s*({_NUM})\s*\)")
_SITE = re.compile(rf"([A-Za-z0-9_.-]+)\s*:\s*\(\s*({_NUM})\s*,\s*({_NUM})\s*\)")


def _rat(token: str) -> Fraction:
    return Fraction(token.replace(" ", ""))


@dataclass
class GalleryFile:
    polygon: SimplePolygon
    sites: Dict[str, Point]


def parse_gallery(text: str) -> GalleryFile:
    body = "\n".join(line for line in text.splitlines()
                     if not line.strip().startswith("#"))
    poly_match = re.search(r"polygon\s*=\s*\[(.*?)\]", body, re.S)
    if not poly_match:
        raise GalleryFormatError("missing 'polygon = [...]'")
    vertices: List[Tuple[Fraction, Fraction]] = []
    for m in _PAIR.finditer(poly_match.group(1)):
        vertices.append((_rat(m.group(1)), _rat(m.group(2))))
    if len(vertices) < 3:
        raise GalleryFormatError("polygon needs at least three vertices")
    poly = SimplePolygon.validate(vertices)

    sites: Dict[str, Point] = {}
    sites_match = re.search(r"sites\s*=\s*\{(.*?)\}", body, re.S)
    if sites_match:
        for m in _SITE.finditer(sites_match.group(1)):
            name = m.group(1)
            if name in sites:
                raise GalleryFormatError(f"duplicate site {name!r}")
            sites[name] = Point(_rat(m.group(2)), _rat(m.group(3)))
    return GalleryFile(poly, sites)


def _fmt(v: Fraction) -> str:
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def format_gallery(gallery: GalleryFile) -> str:
    verts = ", ".join(f"({_fmt(p.x)}, {_fmt(p.y)})" for p in gallery.polygon.vertices)
    lines = [f"polygon = [{verts}]"]
    if gallery.sites:
        body = ", ".join(f"{name}: ({_fmt(q.x)}, {_fmt(q.y)})"
                         for name, q in gallery.sites.items())
        lines.append(f"sites = {{{body}}}")
    return "\n".join(lines) + "\n"
