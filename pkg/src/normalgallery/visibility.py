"""Visibility polygons, wall views, the kernel, and convex-view covers.

The view of a point is built by an exact angular sweep: directions toward the
gallery corners (and their opposites) split the full turn into sectors, inside
each of which the first wall hit by a ray is constant.  Sector boundaries are
then stitched together with radial chords, so every vertex of the resulting
polygon is either a corner, a wall hit, or the site itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import List, Optional, Sequence, Tuple

from .arrangement import CellComplex
from .geometry import (OVERLAP, POINT, Point, cross, direction_cmp,
                       intersect_segments, lerp, midpoint, on_segment, orient,
                       primitive_direction, ray_line_t, ray_point,
                       segment_param, sub)
from .polygon import EXTERIOR, IntervalSet, PointOutside, SimplePolygon


@dataclass(frozen=True)
class View:
    """Visibility polygon of a site (closed region, counter-clockwise)."""
    site: Point
    polygon: SimplePolygon


@dataclass(frozen=True)
class Kernel:
    """Intersection of the inner half-planes of all walls; empty iff not star."""
    points: Tuple[Point, ...]

    def is_empty(self) -> bool:
        return not self.points

    def sample(self) -> Point:
        if not self.points:
            raise ValueError("empty kernel")
        sx = sum((p.x for p in self.points), Fraction(0))
        sy = sum((p.y for p in self.points), Fraction(0))
        return Point(sx / len(self.points), sy / len(self.points))


def _first_hit(poly: SimplePolygon, p: Point, d: Point):
    best = None
    for i, a, b in poly.edges():
        e = sub(b, a)
        denom = cross(d, e)
        if denom == 0:
            continue
        t = cross(sub(a, p), e) / denom
        if t <= 0:
            continue
        s = cross(sub(a, p), d) / denom
        if 0 <= s <= 1:
            if best is None or t < best[0]:
                best = (t, i)
    if best is None:
        return None
    t, i = best
    return t, i, ray_point(p, d, t)


def _limit_point(poly: SimplePolygon, p: Point, d: Point, edge: int) -> Point:
    a, b = poly.edge(edge)
    t = ray_line_t(p, d, a, b)
    if t is not None:
        return ray_point(p, d, t)
    # edge parallel to the boundary ray: only possible when p lies on the
    # edge's supporting line; the limit is the nearest endpoint ahead.
    best = None
    for q in (a, b):
        v = sub(q, p)
        if cross(v, d) != 0:
            continue
        s = v.x / d.x if d.x != 0 else v.y / d.y
        if s > 0 and (best is None or s < best[0]):
            best = (s, q)
    if best is None:  # pragma: no cover - geometry guarantees a limit
        raise ValueError("no limit point on a parallel edge")
    return best[1]


def visibility_polygon(poly: SimplePolygon, p: Point) -> View:
    """Exact view of p under closed visibility."""
    state, _ = poly.classify_point(p)
    if state == EXTERIOR:
        raise PointOutside("site outside the gallery")

    dirs = set()
    for v in poly.vertices:
        if v == p:
            continue
        d = primitive_direction(sub(v, p))
        dirs.add(d)
        dirs.add((-d[0], -d[1]))
    ds = sorted(dirs, key=cmp_to_key(direction_cmp))
    k = len(ds)

    pieces: List[Optional[Tuple[Point, Point]]] = []
    for i in range(k):
        d1 = ds[i]
        d2 = ds[(i + 1) % k]
        probe = Point(Fraction(d1[0] + d2[0]), Fraction(d1[1] + d2[1]))
        hit = _first_hit(poly, p, probe)
        if hit is None:
            pieces.append(None)
            continue
        if poly.classify_point(midpoint(p, hit[2]))[0] == EXTERIOR:
            pieces.append(None)
            continue
        e = hit[1]
        left = _limit_point(poly, p, Point(Fraction(d1[0]), Fraction(d1[1])), e)
        right = _limit_point(poly, p, Point(Fraction(d2[0]), Fraction(d2[1])), e)
        pieces.append((left, right))

    contributing = [i for i in range(k) if pieces[i] is not None]
    if not contributing:  # pragma: no cover - every inside point sees something
        raise ValueError("empty view")

    if len(contributing) == k:
        order = list(range(k))
        cycle: List[Point] = []
    else:
        start = next(i for i in contributing if pieces[(i - 1) % k] is None)
        order = []
        j = start
        while pieces[j] is not None:
            order.append(j)
            j = (j + 1) % k
            if j == start:  # pragma: no cover - guarded by the boundary case
                break
        cycle = [p]

    for i in order:
        left, right = pieces[i]
        if not cycle or cycle[-1] != left:
            cycle.append(left)
        if cycle[-1] != right:
            cycle.append(right)
    if len(cycle) > 1 and cycle[0] == cycle[-1]:
        cycle.pop()

    return View(site=p, polygon=SimplePolygon.validate(cycle))


def wall_view(poly: SimplePolygon, p: Point) -> IntervalSet:
    """Portion of the walls visible from p, as boundary intervals.

    Derived from the view polygon: every contact between a view edge and a
    wall contributes, including degenerate single-point grazes.
    """
    view = visibility_polygon(poly, p)
    pairs: List[Tuple[Fraction, Fraction]] = []
    verts = view.polygon.vertices
    m = len(verts)
    for j in range(m):
        u, v = verts[j], verts[(j + 1) % m]
        for i, a, b in poly.edges():
            kind, payload = intersect_segments(u, v, a, b)
            if kind == OVERLAP:
                lo, hi = payload
                t0 = segment_param(lo, a, b)
                t1 = segment_param(hi, a, b)
                if t0 > t1:
                    t0, t1 = t1, t0
                pairs.append((i + t0, i + t1))
            elif kind == POINT:
                t = segment_param(payload, a, b)
                pairs.append((i + t, i + t))
    # sight lines through corners or along walls can reach boundary points in
    # a one-dimensional sliver of the view; a sliver has no area and never
    # shows up in the view polygon, so its wall contacts are recovered with an
    # exact walk along each corner direction
    for i, a, b in poly.edges():
        if orient(p, a, b) != 0:
            continue
        if on_segment(p, a, b):
            pairs.append((Fraction(i), Fraction(i + 1)))
            continue
        d = sub(a, p)
        walk = poly.ray_walk(p, d)
        tb = (b.x - p.x) / d.x if d.x != 0 else (b.y - p.y) / d.y
        lo, hi = min(Fraction(1), tb), max(Fraction(1), tb)
        if lo <= walk.stop_t:
            q1 = ray_point(p, d, lo)
            q2 = ray_point(p, d, min(hi, walk.stop_t))
            s1 = segment_param(q1, a, b)
            s2 = segment_param(q2, a, b)
            pairs.append((i + min(s1, s2), i + max(s1, s2)))
    seen_dirs = set()
    for v in poly.vertices:
        if v == p:
            continue
        d = primitive_direction(sub(v, p))
        if d in seen_dirs:
            continue
        seen_dirs.add(d)
        walk = poly.ray_walk(p, Point(Fraction(d[0]), Fraction(d[1])))
        contact_ts = list(walk.passes)
        if walk.stop_t > 0:
            contact_ts.append(walk.stop_t)
        for t in contact_ts:
            pos = poly.boundary_pos(ray_point(p, Point(Fraction(d[0]), Fraction(d[1])), t))
            if pos is not None:
                value = pos.value()
                pairs.append((value, value))
    return IntervalSet(poly.n, pairs)


def _clip_halfplane(points: List[Point], a: Point, b: Point) -> List[Point]:
    out: List[Point] = []
    m = len(points)
    for i in range(m):
        cur, nxt = points[i], points[(i + 1) % m]
        oc, on = orient(a, b, cur), orient(a, b, nxt)
        if oc >= 0:
            out.append(cur)
        if (oc > 0 and on < 0) or (oc < 0 and on > 0):
            t = ray_line_t(cur, sub(nxt, cur), a, b)
            out.append(lerp(cur, nxt, t))
    dedup: List[Point] = []
    for q in out:
        if not dedup or dedup[-1] != q:
            dedup.append(q)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def kernel(poly: SimplePolygon) -> Kernel:
    """All points that see the whole gallery (possibly a degenerate polygon)."""
    xmin, ymin, xmax, ymax = poly.bbox()
    region = [Point(xmin - 1, ymin - 1), Point(xmax + 1, ymin - 1),
              Point(xmax + 1, ymax + 1), Point(xmin - 1, ymax + 1)]
    for _, a, b in poly.edges():
        region = _clip_halfplane(region, a, b)
        if not region:
            break
    return Kernel(tuple(region))


def view_is_convex(poly: SimplePolygon, p: Point) -> bool:
    return visibility_polygon(poly, p).polygon.is_convex()


def _chord_pieces(poly: SimplePolygon, view: View) -> List[Tuple[Point, Point]]:
    """Sub-segments of the view boundary that do not lie on a wall."""
    out = []
    verts = view.polygon.vertices
    m = len(verts)
    for j in range(m):
        u, v = verts[j], verts[(j + 1) % m]
        covered = []
        for _, a, b in poly.edges():
            kind, payload = intersect_segments(u, v, a, b)
            if kind == OVERLAP:
                lo, hi = payload
                covered.append(tuple(sorted((segment_param(lo, u, v),
                                             segment_param(hi, u, v)))))
        covered.sort()
        cursor = Fraction(0)
        for lo, hi in covered:
            if lo > cursor:
                out.append((lerp(u, v, cursor), lerp(u, v, lo)))
            cursor = max(cursor, hi)
        if cursor < 1:
            out.append((lerp(u, v, cursor), lerp(u, v, Fraction(1))))
    return out


def _line_key(a: Point, b: Point):
    A = b.y - a.y
    B = a.x - b.x
    C = A * a.x + B * a.y
    scale = A.denominator * B.denominator * C.denominator
    ai, bi, ci = int(A * scale), int(B * scale), int(C * scale)
    g = gcd(gcd(abs(ai), abs(bi)), abs(ci)) or 1
    ai, bi, ci = ai // g, bi // g, ci // g
    if ai < 0 or (ai == 0 and bi < 0):
        ai, bi, ci = -ai, -bi, -ci
    return ai, bi, ci


def merge_collinear_segments(segs: Sequence[Tuple[Point, Point]]) -> List[Tuple[Point, Point]]:
    """Replace overlapping collinear segments by maximal disjoint pieces."""
    groups = {}
    for a, b in segs:
        groups.setdefault(_line_key(a, b), []).append((a, b))
    out = []
    for (A, B, _), group in groups.items():
        horizontal_ish = B != 0 and (A == 0 or abs(A) <= abs(B))
        key = (lambda q: q.x) if (A == 0 or B != 0 and horizontal_ish) else (lambda q: q.y)
        spans = [tuple(sorted((a, b), key=key)) for a, b in group]
        spans.sort(key=lambda s: key(s[0]))
        cur = list(spans[0])
        for a, b in spans[1:]:
            if key(a) <= key(cur[1]):
                if key(b) > key(cur[1]):
                    cur[1] = b
            else:
                out.append((cur[0], cur[1]))
                cur = [a, b]
        out.append((cur[0], cur[1]))
    return out


def convex_cover_certificate(poly: SimplePolygon) -> Optional[List[Point]]:
    """Boundary points with convex views whose views cover the gallery.

    Candidates are the non-reflex corners of edges adjacent to a reflex corner
    and the midpoints of edges whose two corners are both reflex.  The result
    is a soundness certificate: when present the gallery is normal; absence
    decides nothing.
    """
    reflex = set(poly.reflex_corners())
    if not reflex:
        return [poly.vertices[0]]
    n = poly.n
    candidates: List[Point] = []
    for i in range(n):
        a, b = poly.edge(i)
        ra, rb = i in reflex, ((i + 1) % n) in reflex
        if ra and rb:
            candidates.append(midpoint(a, b))
        elif ra:
            candidates.append(b)
        elif rb:
            candidates.append(a)
    seen = set()
    candidates = [q for q in candidates if not (q in seen or seen.add(q))]

    kept: List[Point] = []
    views: List[View] = []
    for q in candidates:
        view = visibility_polygon(poly, q)
        if view.polygon.is_convex():
            kept.append(q)
            views.append(view)
    if not kept:
        return None

    chords: List[Tuple[Point, Point]] = []
    for view in views:
        chords.extend(_chord_pieces(poly, view))
    cells = CellComplex(poly, merge_collinear_segments(chords))
    for trap in cells.traps:
        rep = cells.trap_rep(trap)
        if not any(poly.segment_inside(q, rep) for q in kept):
            return None
    return kept
