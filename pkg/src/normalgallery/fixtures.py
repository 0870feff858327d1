"""Built-in galleries and random generators.

The named figures ship concrete rational coordinates that reproduce the
combinatorial structure of the classical examples: a six-corner pinwheel
whose three tip guards cover the walls but miss a central point, an
eight-corner gallery that is not normal with corner witness {4,5,8}, a
nine-corner gallery that is normal for its corners but not once an extra
wall site G is added, a gallery whose hidden region has two components, and
a spiral that is normal without being star-shaped.  Where the schematic
drawings rely on exact collinearities that would make the window arrangement
degenerate, coordinates are nudged slightly; every advertised property is
re-verified by the oracle suite in the tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .decomposition import (DecompositionError, GuardSiteSet,
                            IncomparableNeighbors, build_decomposition,
                            dual_graph_and_sinks)
from .geometry import Point, convex_hull, intersect_segments, pt
from .polygon import INTERIOR, PolygonError, SimplePolygon


@dataclass(frozen=True)
class Fixture:
    name: str
    polygon: SimplePolygon
    sites: Dict[str, Point]

    def site_set(self, names: Optional[List[str]] = None) -> GuardSiteSet:
        if names is None:
            items = list(self.sites.items())
        else:
            items = [(n, self.sites[n]) for n in names]
        return GuardSiteSet.build(self.polygon, items)


def _fx(name, vertices, sites) -> Fixture:
    poly = SimplePolygon.validate(vertices)
    return Fixture(name, poly, {k: pt(*v) for k, v in sites.items()})


F = Fraction

FIXTURES: Dict[str, Fixture] = {}

FIXTURES["square"] = _fx(
    "square",
    [(0, 0), (4, 0), (4, 4), (0, 4)],
    {"centroid": (2, 2)})

FIXTURES["lshape"] = _fx(
    "lshape",
    [(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)],
    {"s": (4, 1)})

# three-armed pinwheel: guards at the arm tips cover the walls, the central
# triangle stays dark
FIXTURES["gamma6"] = _fx(
    "gamma6",
    [(10, 7), (9, 6), (3, 5), (4, 5), (6, 0), (6, 1)],
    {"A": (10, 7), "B": (3, 5), "C": (6, 0), "D": (F(13, 2), F(9, 2))})

# eight corners, three reflex; corners 4, 5, 8 cover the walls but miss a
# triangle next to corner 7.  Corner 7 sits at (2, 9/2) and corner 4 at
# (49/8, 1) so that no two windows share a supporting line.
FIXTURES["gamma8"] = _fx(
    "gamma8",
    [(1, 6), (1, 5), (2, F(9, 2)), (2, 3), (0, 1), (F(49, 8), 1), (5, 2), (5, 6)],
    {"1": (1, 6), "2": (5, 6), "3": (5, 2), "4": (F(49, 8), 1),
     "5": (0, 1), "6": (2, 3), "7": (2, F(9, 2)), "8": (1, 5)})

# nine corners: normal for its corners, not normal once the wall site G is
# added.  Corners 1 and 7 are nudged off the schematic grid to break the
# exact corner collinearities; G sits on the bottom wall near the spot where
# the window of (8, corner 3) lands.
FIXTURES["gamma9"] = _fx(
    "gamma9",
    [(F(9, 8), 4), (1, 3), (2, 3), (2, F(9, 8)), (1, 0), (6, 0), (6, 1), (4, 1), (4, 4)],
    {"1": (F(9, 8), 4), "2": (4, 4), "3": (4, 1), "4": (6, 1), "5": (6, 0),
     "6": (1, 0), "7": (2, F(9, 8)), "8": (2, 3), "9": (1, 3),
     "G": (F(24, 5), 0)})

# sixteen corners; guards 1..5 cover the walls and the hidden region has two
# components.  The support-line coincidences of the classical drawing are
# kept on purpose, so the window arrangement for these guards is degenerate
# and the decomposition refuses to build: this is the degeneracy showcase.
FIXTURES["fig2_left"] = _fx(
    "fig2_left",
    [(0, 6), (3, 6), (3, 5), (2, 4), (4, 2), (5, 2), (7, 4), (9, 2),
     (8, 1), (7, 2), (6, 1), (6, 0), (0, 2), (1, 3), (1, 5), (0, 5)],
    {"1": (0, 5), "2": (0, 2), "3": (4, 2), "4": (6, 0), "5": (8, 1)})

# rectangular spiral: not star-shaped, but four wall points with convex views
# cover it, so it is normal
FIXTURES["fig2_right"] = _fx(
    "fig2_right",
    [(0, 5), (6, 5), (6, 0), (0, 0), (0, 3), (2, 3), (2, 1), (4, 1), (4, 4), (0, 4)],
    {"1": (2, 4), "2": (4, 3), "3": (3, 1), "4": (2, 2)})

# two mirrored sites aligned with one reflex corner: their windows coincide,
# which the general-position check must report
FIXTURES["tpoly"] = _fx(
    "tpoly",
    [(0, 0), (6, 0), (6, 2), (4, 2), (4, 4), (2, 4), (2, 2), (0, 2)],
    {"m1": (5, F(1, 2)), "m2": (F(26, 5), F(1, 5))})


def get(name: str) -> Fixture:
    return FIXTURES[name]


# random generators -------------------------------------------------------


def random_simple_polygon(rng: random.Random, n: int, box: int = 24) -> SimplePolygon:
    """Random simple polygon on the integer lattice via 2-opt untangling."""
    while True:
        pts: List[Point] = []
        seen = set()
        while len(pts) < n:
            q = (rng.randint(0, box), rng.randint(0, box))
            if q not in seen:
                seen.add(q)
                pts.append(pt(*q))
        rng.shuffle(pts)
        if _untangle(pts):
            try:
                poly = SimplePolygon.validate(pts)
            except PolygonError:
                continue
            if poly.n >= max(3, n - 2):
                return poly


def _untangle(pts: List[Point], max_rounds: int = 4000) -> bool:
    n = len(pts)
    for _ in range(max_rounds):
        crossing = None
        for i in range(n):
            a1, b1 = pts[i], pts[(i + 1) % n]
            for j in range(i + 1, n):
                if j == i + 1 or (i == 0 and j == n - 1):
                    continue
                kind, _ = intersect_segments(a1, b1, pts[j], pts[(j + 1) % n])
                if kind != "empty":
                    crossing = (i, j)
                    break
            if crossing:
                break
        if crossing is None:
            return True
        i, j = crossing
        pts[i + 1:j + 1] = reversed(pts[i + 1:j + 1])
    return False


def random_interior_sites(rng: random.Random, poly: SimplePolygon, m: int,
                          denom: int = 2) -> GuardSiteSet:
    xmin, ymin, xmax, ymax = poly.bbox()
    chosen: List[Tuple[str, Point]] = []
    used = set()
    guard = 0
    while len(chosen) < m:
        guard += 1
        if guard > 20000:
            raise RuntimeError("site sampling stalled")
        q = Point(Fraction(rng.randint(int(xmin * denom), int(xmax * denom)), denom),
                  Fraction(rng.randint(int(ymin * denom), int(ymax * denom)), denom))
        if q in used:
            continue
        if poly.classify_point(q)[0] == INTERIOR:
            used.add(q)
            chosen.append((f"s{len(chosen)}", q))
    return GuardSiteSet.build(poly, chosen)


def random_low_reflex_polygon(rng: random.Random, n: int, box: int = 24,
                              max_reflex: int = 2) -> SimplePolygon:
    """Convex lattice polygon with up to max_reflex dents."""
    while True:
        pts = [pt(rng.randint(0, box), rng.randint(0, box)) for _ in range(max(n + 4, 8))]
        hull = convex_hull(pts)
        if len(hull) < max(4, n - max_reflex):
            continue
        verts = list(hull)
        dents = rng.randint(0, max_reflex)
        indices = list(range(len(verts)))
        rng.shuffle(indices)
        dented = []
        for idx in indices[:dents]:
            a = verts[idx]
            b = verts[(idx + 1) % len(verts)]
            mid = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
            cx = sum((q.x for q in verts), Fraction(0)) / len(verts)
            cy = sum((q.y for q in verts), Fraction(0)) / len(verts)
            dent = Point(mid.x + (cx - mid.x) / 2, mid.y + (cy - mid.y) / 2)
            dented.append((idx, dent))
        out: List[Point] = []
        for i, v in enumerate(verts):
            out.append(v)
            for idx, dent in dented:
                if idx == i:
                    out.append(dent)
        try:
            poly = SimplePolygon.validate(out)
        except PolygonError:
            continue
        if len(poly.reflex_corners()) <= max_reflex:
            return poly


def random_star_polygon(rng: random.Random, n: int, box: int = 24) -> SimplePolygon:
    """Star-shaped lattice polygon: angular sort around an interior anchor."""
    anchor = Point(Fraction(box, 2), Fraction(box, 2))
    while True:
        raw: List[Point] = []
        seen = set()
        while len(raw) < n:
            q = pt(rng.randint(0, box), rng.randint(0, box))
            if q == anchor or q in seen:
                continue
            seen.add(q)
            raw.append(q)
        # drop points sharing a direction from the anchor (keep the nearer)
        from .geometry import primitive_direction, sub, direction_cmp
        from functools import cmp_to_key
        by_dir: Dict[Tuple[int, int], Point] = {}
        for q in raw:
            d = primitive_direction(sub(q, anchor))
            cur = by_dir.get(d)
            if cur is None or (abs(q.x - anchor.x) + abs(q.y - anchor.y)
                               < abs(cur.x - anchor.x) + abs(cur.y - anchor.y)):
                by_dir[d] = q
        if len(by_dir) < 3:
            continue
        dirs = sorted(by_dir, key=cmp_to_key(direction_cmp))
        pts = [by_dir[d] for d in dirs]
        try:
            poly = SimplePolygon.validate(pts)
        except PolygonError:
            continue
        if poly.classify_point(anchor)[0] != "exterior":
            from .visibility import kernel
            if not kernel(poly).is_empty():
                return poly


def spiral_gallery(turns: int) -> SimplePolygon:
    """Right-angled spiral corridor with the requested number of inward turns.

    Built as a width-1 corridor of unit cells spiraling clockwise inward with
    a thickness-1 wall between layers, then traced back into a polygon.  The
    corridor is normal by a convex-view cover however many turns it makes,
    while its reflex corner count grows with the turns.
    """
    if turns < 1:
        raise ValueError("at least one turn")
    size = 4 * turns + 3
    moves = ((1, 0), (0, -1), (-1, 0), (0, 1))  # E S W N
    legs = [size - 1, size - 1, size - 1]
    step = size - 3
    while step >= 1:
        legs.extend((step, step))
        step -= 2
    x, y = 0, size - 1
    cells = {(x, y)}
    for k, leg in enumerate(legs):
        dx, dy = moves[k % 4]
        for _ in range(leg):
            x, y = x + dx, y + dy
            cells.add((x, y))
    return _cells_to_polygon(cells)


def _cells_to_polygon(cells) -> SimplePolygon:
    """Trace the boundary of a simply connected set of unit cells."""
    edges = {}
    for (i, j) in cells:
        if (i, j - 1) not in cells:
            edges[(i, j)] = (i + 1, j)
        if (i + 1, j) not in cells:
            edges[(i + 1, j)] = (i + 1, j + 1)
        if (i, j + 1) not in cells:
            edges[(i + 1, j + 1)] = (i, j + 1)
        if (i - 1, j) not in cells:
            edges[(i, j + 1)] = (i, j)
    start = min(edges)
    cycle = [start]
    cur = edges[start]
    while cur != start:
        cycle.append(cur)
        cur = edges[cur]
    return SimplePolygon.validate([pt(*q) for q in cycle])


def random_general_position_instance(rng: random.Random, n_max: int = 14,
                                     m_max: int = 10,
                                     polygon_factory=None):
    """A (polygon, sites) pair whose window arrangement is in general position."""
    factory = polygon_factory or (lambda r: random_simple_polygon(r, r.randint(5, n_max)))
    while True:
        poly = factory(rng)
        m = rng.randint(1, m_max)
        try:
            sites = random_interior_sites(rng, poly, m)
        except RuntimeError:
            continue
        try:
            dec = build_decomposition(poly, sites)
            dual_graph_and_sinks(dec)
        except (DecompositionError, IncomparableNeighbors):
            continue
        return poly, sites
