"""The gallery model: a validated simple polygon with exact queries.

Conventions used throughout the package:

* vertices are stored counter-clockwise; edge i joins vertex i to vertex i+1 (mod n);
* visibility is closed: a sight segment may run along the boundary or graze a
  corner, as long as it never leaves the closed polygon;
* the boundary is parameterised combinatorially: position (edge, t) maps to the
  value edge + t in [0, n).  Euclidean arc length would need square roots and
  break exactness, and every covering statement is invariant under this
  per-edge reparameterisation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .geometry import (EMPTY, OVERLAP, POINT, Point, collinear, cross,
                       intersect_segments, lerp, on_segment, orient,
                       polygon_area2, pt, ray_point, segment_param, sub)


class PolygonError(ValueError):
    pass


class TooFewVertices(PolygonError):
    pass


class ZeroLengthEdge(PolygonError):
    pass


class NotSimple(PolygonError):
    def __init__(self, i: int, j: int):
        super().__init__(f"edges {i} and {j} intersect")
        self.edges = (i, j)


class PointOutside(PolygonError):
    pass


class NoHit(PolygonError):
    pass


class DegenerateAlongEdge(PolygonError):
    pass


class BoundaryPos(NamedTuple):
    """Position on the walls: fraction t in [0, 1) along edge `edge`."""
    edge: int
    t: Fraction

    def value(self) -> Fraction:
        return self.edge + self.t


def make_pos(n: int, edge: int, t: Fraction) -> BoundaryPos:
    if t == 1:
        return BoundaryPos((edge + 1) % n, Fraction(0))
    return BoundaryPos(edge % n, t)


INTERIOR = "interior"
BOUNDARY = "boundary"
EXTERIOR = "exterior"


class SimplePolygon:
    """Simple polygon, counter-clockwise, no two consecutive collinear edges."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Tuple[Point, ...]):
        self.vertices = vertices

    # construction -------------------------------------------------------

    @classmethod
    def validate(cls, raw: Iterable) -> "SimplePolygon":
        pts: List[Point] = []
        for q in raw:
            if isinstance(q, Point):
                pts.append(q)
            else:
                x, y = q
                pts.append(pt(x, y))
        if len(pts) < 3:
            raise TooFewVertices(f"{len(pts)} vertices")
        for i, p in enumerate(pts):
            if p == pts[(i + 1) % len(pts)]:
                raise ZeroLengthEdge(f"edge {i}")
        if all(orient(pts[0], pts[1], q) == 0 for q in pts[2:]):
            raise TooFewVertices("collinear input")
        # merge straight-through vertices; a collinear reversal is a spike
        changed = True
        while changed:
            changed = False
            n = len(pts)
            if n < 3:
                raise TooFewVertices("collinear input")
            for i in range(n):
                a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
                if orient(a, b, c) == 0:
                    forward = ((b.x - a.x) * (c.x - b.x)
                               + (b.y - a.y) * (c.y - b.y))
                    if forward <= 0:
                        raise NotSimple((i - 1) % n, i)
                    del pts[i]
                    changed = True
                    break
        n = len(pts)
        if n < 3:
            raise TooFewVertices("collinear input")
        for i in range(n):
            a1, b1 = pts[i], pts[(i + 1) % n]
            for j in range(i + 1, n):
                if j == i + 1 or (i == 0 and j == n - 1):
                    continue
                kind, _ = intersect_segments(a1, b1, pts[j], pts[(j + 1) % n])
                if kind != EMPTY:
                    raise NotSimple(i, j)
        if polygon_area2(pts) < 0:
            pts.reverse()
        return cls(tuple(pts))

    # basic queries ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edge(self, i: int) -> Tuple[Point, Point]:
        return self.vertices[i], self.vertices[(i + 1) % self.n]

    def edges(self) -> Iterator[Tuple[int, Point, Point]]:
        n = self.n
        for i in range(n):
            yield i, self.vertices[i], self.vertices[(i + 1) % n]

    def area(self) -> Fraction:
        return polygon_area2(self.vertices) / 2

    def bbox(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def reflex_corners(self) -> List[int]:
        n = self.n
        return [i for i in range(n)
                if orient(self.vertices[i - 1], self.vertices[i],
                          self.vertices[(i + 1) % n]) < 0]

    def is_convex(self) -> bool:
        return not self.reflex_corners()

    def point_at(self, pos: BoundaryPos) -> Point:
        a, b = self.edge(pos.edge)
        return lerp(a, b, pos.t)

    def boundary_pos(self, p: Point) -> Optional[BoundaryPos]:
        for i, a, b in self.edges():
            if on_segment(p, a, b):
                return make_pos(self.n, i, segment_param(p, a, b))
        return None

    def classify_point(self, p: Point) -> Tuple[str, Optional[BoundaryPos]]:
        """Exact point location: interior / boundary (with position) / exterior."""
        pos = self.boundary_pos(p)
        if pos is not None:
            return BOUNDARY, pos
        inside = False
        for _, a, b in self.edges():
            if (a.y > p.y) != (b.y > p.y):
                # edge crosses the horizontal through p; count crossings right of p
                o = orient(a, b, p)
                if b.y > a.y:
                    if o > 0:
                        inside = not inside
                else:
                    if o < 0:
                        inside = not inside
        return (INTERIOR, None) if inside else (EXTERIOR, None)

    def contains(self, p: Point) -> bool:
        return self.classify_point(p)[0] != EXTERIOR

    # closed visibility --------------------------------------------------

    def segment_inside(self, a: Point, b: Point) -> bool:
        """True iff the closed segment ab lies in the closed polygon.

        Split at every boundary intersection and classify the midpoint of
        each open piece; all data stays rational so the test is exact.
        """
        if not self.contains(a) or not self.contains(b):
            raise PointOutside("segment endpoint outside the gallery")
        if a == b:
            return True
        ts = {Fraction(0), Fraction(1)}
        for _, u, v in self.edges():
            kind, payload = intersect_segments(a, b, u, v)
            if kind == POINT:
                ts.add(segment_param(payload, a, b))
            elif kind == OVERLAP:
                lo, hi = payload
                ts.add(segment_param(lo, a, b))
                ts.add(segment_param(hi, a, b))
        for t0, t1 in _consecutive(sorted(ts)):
            mid = lerp(a, b, (t0 + t1) / 2)
            if self.classify_point(mid)[0] == EXTERIOR:
                return False
        return True

    # ray tracing ---------------------------------------------------------

    def ray_walk(self, origin: Point, direction: Point) -> "RayWalk":
        """Trace origin + t*direction (t > 0) until it finally leaves the closed polygon.

        Records interior stretches, stretches running along walls, and vertex
        grazes, all with exact parameters.
        """
        if direction.x == 0 and direction.y == 0:
            raise ValueError("zero direction")
        contacts: List[Fraction] = []
        runs: List[Tuple[Fraction, Fraction, int]] = []
        for i, a, b in self.edges():
            e = sub(b, a)
            denom = cross(direction, e)
            if denom == 0:
                if collinear(origin, a, b):
                    # ray collinear with the wall: overlap range in t
                    if direction.x != 0:
                        ta = (a.x - origin.x) / direction.x
                        tb = (b.x - origin.x) / direction.x
                    else:
                        ta = (a.y - origin.y) / direction.y
                        tb = (b.y - origin.y) / direction.y
                    lo, hi = min(ta, tb), max(ta, tb)
                    if hi > 0:
                        runs.append((max(lo, Fraction(0)), hi, i))
                continue
            t = cross(sub(a, origin), e) / denom
            if t <= 0:
                continue
            s = cross(sub(a, origin), direction) / denom
            if 0 <= s <= 1:
                contacts.append(t)
        breaks = sorted({t for t in contacts}
                        | {t for lo, hi, _ in runs for t in (lo, hi) if t > 0}
                        | {Fraction(0)})
        last = breaks[-1] + 1
        gaps: List[Tuple[Fraction, Fraction, str]] = []
        stop_t: Optional[Fraction] = None
        for t0, t1 in _consecutive(breaks + [last]):
            tm = (t0 + t1) / 2
            if any(lo <= tm <= hi for lo, hi, _ in runs):
                gaps.append((t0, t1, "run"))
                continue
            mid = ray_point(origin, direction, tm)
            state = self.classify_point(mid)[0]
            if state == EXTERIOR:
                stop_t = t0
                break
            gaps.append((t0, t1, "interior"))
        if stop_t is None:  # pragma: no cover - bounded polygon always exits
            stop_t = last
        interior_gaps = [(t0, t1) for t0, t1, kind in gaps if kind == "interior"]
        run_gaps = [(t0, t1) for t0, t1, kind in gaps if kind == "run"]
        passes = [a1 for (_, a1, k1), (_, _, k2) in zip(gaps, gaps[1:])
                  if k1 == "interior" and k2 == "interior"]
        stop_point = ray_point(origin, direction, stop_t)
        stop_pos = self.boundary_pos(stop_point) if stop_t > 0 else self.boundary_pos(origin)
        return RayWalk(stop_t, stop_point, stop_pos, interior_gaps, run_gaps, passes)

    def ray_shoot(self, origin: Point, direction: Point) -> Tuple[Point, BoundaryPos]:
        """First boundary point strictly beyond origin along the ray.

        Raises DegenerateAlongEdge when the ray starts out running collinearly
        along a wall, and NoHit when it exits the gallery immediately.
        """
        walk = self.ray_walk(origin, direction)
        if walk.stop_t == 0:
            raise NoHit("ray leaves the gallery at its origin")
        if walk.runs and (not walk.interior_gaps
                          or walk.runs[0][0] <= walk.interior_gaps[0][1]):
            raise DegenerateAlongEdge("ray overlaps a wall edge")
        hit_t = walk.interior_gaps[0][1]
        hit = ray_point(origin, direction, hit_t)
        pos = self.boundary_pos(hit)
        if pos is None:  # pragma: no cover - hit is a boundary contact by construction
            raise NoHit("ray hit is not on the boundary")
        return hit, pos


@dataclass(frozen=True)
class RayWalk:
    stop_t: Fraction
    stop_point: Point
    stop_pos: Optional[BoundaryPos]
    interior_gaps: List[Tuple[Fraction, Fraction]]
    runs: List[Tuple[Fraction, Fraction]]
    passes: List[Fraction]


def _consecutive(values):
    return zip(values, values[1:])


# boundary intervals -----------------------------------------------------------


class IntervalSet:
    """Union of closed intervals of boundary values on the circle [0, n).

    Intervals are stored sorted and disjoint (touching intervals merged);
    degenerate single-point intervals are kept, they contribute no measure.
    """

    __slots__ = ("length", "intervals")

    def __init__(self, length: int, intervals: Sequence[Tuple[Fraction, Fraction]] = ()):
        self.length = length
        self.intervals = _normalise(length, intervals)

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        parts = ", ".join(f"[{a}, {b}]" for a, b in self.intervals)
        return f"IntervalSet({self.length}: {parts})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, IntervalSet)
                and self.length == other.length
                and self.intervals == other.intervals)

    def __hash__(self):
        return hash((self.length, self.intervals))

    @property
    def measure(self) -> Fraction:
        return sum((b - a for a, b in self.intervals), Fraction(0))

    def is_full(self) -> bool:
        return self.measure == self.length

    def gaps(self) -> List[Tuple[Fraction, Fraction]]:
        """Open complementary arcs (start, end), circularly interpreted."""
        if not self.intervals:
            return [(Fraction(0), Fraction(self.length))]
        out = []
        for (_, end), (start, _) in zip(self.intervals, self.intervals[1:]):
            if start > end:
                out.append((end, start))
        last_hi = self.intervals[-1][1]
        first_lo = self.intervals[0][0] + self.length
        if first_lo > last_hi:
            out.append((last_hi, first_lo))
        return out

    def covers_value(self, v: Fraction) -> bool:
        v = v % self.length
        return any(a <= v <= b for a, b in self.intervals) or \
            any(b == self.length and v == 0 for _, b in self.intervals)


def _normalise(length, raw):
    spans = []
    for a, b in raw:
        a, b = Fraction(a), Fraction(b)
        span = b - a
        if span < 0:
            raise ValueError("interval endpoints out of order")
        if span >= length:
            return ((Fraction(0), Fraction(length)),)
        a = a % length
        b = a + span
        if b <= length:
            spans.append((a, b))
        else:
            spans.append((a, Fraction(length)))
            spans.append((Fraction(0), b - length))
    spans.sort()
    merged: List[List[Fraction]] = []
    for a, b in spans:
        if merged and a <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], b)
        else:
            merged.append([a, b])
    return tuple((a, b) for a, b in merged)


def interval_union_measure(length: int, sets: Sequence) -> Tuple[IntervalSet, Fraction]:
    """Union of interval sets on the same circle with its exact measure.

    Endpoints are merged on one sorted list (left endpoints first at ties),
    which is also what makes the full-coverage test exact: the union of
    closed intervals covers the circle iff its measure equals the length.
    """
    pairs: List[Tuple[Fraction, Fraction]] = []
    for s in sets:
        if isinstance(s, IntervalSet):
            if s.length != length:
                raise ValueError("mismatched boundary lengths")
            pairs.extend(s.intervals)
        else:
            pairs.extend(s)
    union = IntervalSet(length, pairs)
    return union, union.measure
