"""Exact planar primitives on rational coordinates.

Every coordinate is a Fraction and every predicate is decided by integer
arithmetic on numerator/denominator pairs, so there is no floating point
and no epsilon anywhere.  Intersection points of rational segments are
rational, which keeps the whole pipeline exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional, Sequence, Tuple, Union

Rational = Union[int, str, Fraction]


def frac(value: Rational) -> Fraction:
    """Coerce to an exact Fraction.  Floats are rejected on purpose."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass int, str or Fraction")
    return Fraction(value)


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return f"({self.x}, {self.y})"


def pt(x: Rational, y: Rational) -> Point:
    return Point(frac(x), frac(y))


def sub(a: Point, b: Point) -> Point:
    return Point(a.x - b.x, a.y - b.y)


def add(a: Point, b: Point) -> Point:
    return Point(a.x + b.x, a.y + b.y)


def scale(p: Point, k: Rational) -> Point:
    k = frac(k)
    return Point(p.x * k, p.y * k)


def midpoint(a: Point, b: Point) -> Point:
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2)


def lerp(a: Point, b: Point, t: Fraction) -> Point:
    return Point(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)


def _dnum(a: Fraction, b: Fraction) -> Tuple[int, int]:
    # a - b as an unnormalised (numerator, denominator) pair; denominator > 0
    return (a.numerator * b.denominator - b.numerator * a.denominator,
            a.denominator * b.denominator)


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q-p) x (r-p): +1 left turn, -1 right, 0 collinear."""
    axn, axd = _dnum(q.x, p.x)
    ayn, ayd = _dnum(q.y, p.y)
    bxn, bxd = _dnum(r.x, p.x)
    byn, byd = _dnum(r.y, p.y)
    v = axn * byn * ayd * bxd - ayn * bxn * axd * byd
    return (v > 0) - (v < 0)


def collinear(p: Point, q: Point, r: Point) -> bool:
    return orient(p, q, r) == 0


def cross(a: Point, b: Point) -> Fraction:
    """Exact cross product of two vectors."""
    return a.x * b.y - a.y * b.x


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on the closed segment ab (a == b allowed)."""
    if orient(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def segment_param(p: Point, a: Point, b: Point) -> Fraction:
    """Parameter t with p == a + t*(b-a); caller guarantees p on line ab, a != b."""
    if a.x != b.x:
        return (p.x - a.x) / (b.x - a.x)
    return (p.y - a.y) / (b.y - a.y)


# segment-segment intersection -------------------------------------------------

EMPTY = "empty"
POINT = "point"
OVERLAP = "overlap"


def intersect_segments(p1: Point, p2: Point, p3: Point, p4: Point):
    """Exact classification of the intersection of closed segments p1p2 and p3p4.

    Returns (EMPTY, None), (POINT, point) or (OVERLAP, (a, b)) where the
    overlap is a positive-length collinear sub-segment.
    """
    d1 = orient(p3, p4, p1)
    d2 = orient(p3, p4, p2)
    d3 = orient(p1, p2, p3)
    d4 = orient(p1, p2, p4)

    if d1 == 0 and d2 == 0 and d3 == 0 and d4 == 0:
        # collinear: compare 1-D extents along the dominant axis
        if p1.x != p2.x or p3.x != p4.x:
            key = lambda q: q.x
        else:
            key = lambda q: q.y
        a1, b1 = sorted((p1, p2), key=key)
        a2, b2 = sorted((p3, p4), key=key)
        lo = a1 if key(a1) >= key(a2) else a2
        hi = b1 if key(b1) <= key(b2) else b2
        if key(lo) > key(hi):
            return EMPTY, None
        if lo == hi:
            return POINT, lo
        return OVERLAP, (lo, hi)

    if ((d1 > 0) != (d2 > 0) or d1 == 0 or d2 == 0) and \
       ((d3 > 0) != (d4 > 0) or d3 == 0 or d4 == 0):
        # touching at an endpoint?
        for q, da, (sa, sb) in ((p1, d1, (p3, p4)), (p2, d2, (p3, p4)),
                                (p3, d3, (p1, p2)), (p4, d4, (p1, p2))):
            if da == 0 and on_segment(q, sa, sb):
                return POINT, q
        if d1 * d2 < 0 and d3 * d4 < 0:
            # proper crossing: exact point
            r = sub(p2, p1)
            s = sub(p4, p3)
            denom = cross(r, s)
            t = cross(sub(p3, p1), s) / denom
            return POINT, lerp(p1, p2, t)
    return EMPTY, None


def ray_line_t(origin: Point, direction: Point, a: Point, b: Point) -> Optional[Fraction]:
    """Parameter t >= anything with origin + t*direction on line ab, or None if parallel."""
    denom = cross(direction, sub(b, a))
    if denom == 0:
        return None
    return cross(sub(a, origin), sub(b, a)) / denom


def ray_point(origin: Point, direction: Point, t: Fraction) -> Point:
    return Point(origin.x + direction.x * t, origin.y + direction.y * t)


def primitive_direction(d: Point) -> Tuple[int, int]:
    """Canonical integer direction for a nonzero rational vector."""
    nx = d.x.numerator * d.y.denominator
    ny = d.y.numerator * d.x.denominator
    g = gcd(abs(nx), abs(ny))
    return (nx // g, ny // g)


def _half(d: Tuple[int, int]) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2*pi)
    return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1


def direction_cmp(a: Tuple[int, int], b: Tuple[int, int]) -> int:
    """Order integer directions counter-clockwise starting from +x."""
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return -1 if ha < hb else 1
    c = a[0] * b[1] - a[1] * b[0]
    return (c > 0) - (c < 0)


def polygon_area2(points: Sequence[Point]) -> Fraction:
    """Twice the signed area (positive for counter-clockwise)."""
    total = Fraction(0)
    n = len(points)
    for i in range(n):
        a = points[i]
        b = points[(i + 1) % n]
        total += a.x * b.y - b.x * a.y
    return total


def convex_hull(points: Sequence[Point]) -> list:
    """Andrew monotone chain; returns hull vertices counter-clockwise."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return list(pts)
    lower = []
    for p in pts:
        while len(lower) >= 2 and orient(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and orient(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]
