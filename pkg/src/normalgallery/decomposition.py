"""Feasible pairs, windows, the visibility decomposition and its sinks.

A feasible pair is a site P and a reflex corner C visible from it whose two
walls lie in one closed half-plane of the line PC.  The window of the pair is
the segment from C along the ray P->C to the furthest wall point visible from
P; the windows together with the walls cut the gallery into visibility
regions, inside each of which the set of sites that see the region is
constant.  Sinks are the regions whose every neighbour sees at least as much.

Degenerate inputs (collinear windows, windows running along walls and then
re-entering, grazed corners mid-window) are detected and reported rather than
perturbed, so the decomposition produced for a fixture is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .arrangement import CellComplex, DegenerateArrangement, Trap
from .geometry import (OVERLAP, Point, intersect_segments, on_segment, pt,
                       ray_point, sub)
from .polygon import BOUNDARY, EXTERIOR, BoundaryPos, SimplePolygon


class SiteError(ValueError):
    pass


class IncomparableNeighbors(ValueError):
    """Adjacent regions whose visible-site sets do not differ by one site."""


@dataclass(frozen=True)
class GuardSiteSet:
    """Ordered, named candidate guard positions inside the closed gallery."""
    names: Tuple[str, ...]
    points: Tuple[Point, ...]

    @classmethod
    def build(cls, poly: SimplePolygon, named_points) -> "GuardSiteSet":
        names: List[str] = []
        points: List[Point] = []
        if isinstance(named_points, dict):
            named_points = list(named_points.items())
        for name, q in named_points:
            if not isinstance(q, Point):
                q = pt(q[0], q[1])
            if name in names:
                raise SiteError(f"duplicate site name {name!r}")
            if q in points:
                raise SiteError(f"duplicate site position {q}")
            if poly.classify_point(q)[0] == EXTERIOR:
                raise SiteError(f"site {name!r} lies outside the gallery")
            names.append(str(name))
            points.append(q)
        return cls(tuple(names), tuple(points))

    @classmethod
    def from_corners(cls, poly: SimplePolygon) -> "GuardSiteSet":
        return cls.build(poly, [(f"v{i}", v) for i, v in enumerate(poly.vertices)])

    def __len__(self) -> int:
        return len(self.points)

    def name_set(self, indices) -> FrozenSet[str]:
        return frozenset(self.names[i] for i in indices)


@dataclass(frozen=True)
class FeasiblePair:
    site: int       # index into the site set
    base: int       # reflex vertex index


@dataclass(frozen=True)
class Window:
    pair: FeasiblePair
    base: Point
    tip: Point
    tip_pos: BoundaryPos


@dataclass
class DegeneracyReport:
    violations: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def ok(self) -> bool:
        return not self.violations


def feasible_pairs(poly: SimplePolygon, sites: GuardSiteSet) -> List[FeasiblePair]:
    """All pairs (site, reflex corner) per the one-sided wall rule.

    The half-plane test is closed: a wall lying on the line PC still counts as
    being on either side.
    """
    out: List[FeasiblePair] = []
    reflex = poly.reflex_corners()
    n = poly.n
    for si, p in enumerate(sites.points):
        for c in reflex:
            corner = poly.vertices[c]
            if p == corner:
                continue
            if not poly.segment_inside(p, corner):
                continue
            d = sub(corner, p)
            w_prev = sub(poly.vertices[(c - 1) % n], corner)
            w_next = sub(poly.vertices[(c + 1) % n], corner)
            s1 = (d.x * w_prev.y - d.y * w_prev.x)
            s2 = (d.x * w_next.y - d.y * w_next.x)
            if s1 * s2 >= 0:
                out.append(FeasiblePair(si, c))
    return out


def build_windows(poly: SimplePolygon, sites: GuardSiteSet,
                  pairs: Sequence[FeasiblePair]):
    """Windows for the feasible pairs, plus a degeneracy report.

    A window whose ray immediately runs along a wall and then exits is
    vacuous (the boundary already separates) and is skipped with a note; a
    window whose ray re-enters after a wall run, or passes through a corner
    mid-flight, is a reported degeneracy.
    """
    report = DegeneracyReport()
    windows: List[Window] = []
    for pair in pairs:
        base = poly.vertices[pair.base]
        direction = sub(base, sites.points[pair.site])
        walk = poly.ray_walk(base, direction)
        label = f"window ({sites.names[pair.site]}, corner {pair.base})"
        if not walk.interior_gaps:
            report.notes.append(f"{label} runs along a wall and is vacuous")
            continue
        first = walk.interior_gaps[0]
        clean = (first[0] == 0
                 and len(walk.interior_gaps) == 1
                 and not any(t < first[1] for t in walk.passes)
                 and not any(lo < first[1] for lo, _ in walk.runs))
        if not clean:
            report.violations.append(f"{label} is degenerate (wall run or grazed corner)")
            continue
        tip = ray_point(base, direction, first[1])
        tip_pos = poly.boundary_pos(tip)
        if tip_pos is None:  # pragma: no cover - tip is a boundary contact
            report.violations.append(f"{label} tip not on the walls")
            continue
        windows.append(Window(pair, base, tip, tip_pos))
    return windows, report


def check_general_position(poly: SimplePolygon, sites: GuardSiteSet,
                           windows: Sequence[Window],
                           report: Optional[DegeneracyReport] = None) -> DegeneracyReport:
    """Sufficient conditions for a well-behaved decomposition.

    No two windows may share a supporting line with a positive-length overlap,
    no site may lie in the relative interior of another site's window, and no
    window may pass through a corner or another site mid-flight.
    """
    report = report or DegeneracyReport()
    for i in range(len(windows)):
        wi = windows[i]
        for j in range(i + 1, len(windows)):
            wj = windows[j]
            kind, payload = intersect_segments(wi.base, wi.tip, wj.base, wj.tip)
            if kind == OVERLAP:
                report.violations.append(
                    f"windows of sites {sites.names[wi.pair.site]} and "
                    f"{sites.names[wj.pair.site]} are collinear with overlapping spans")
    for w in windows:
        for si, q in enumerate(sites.points):
            if q in (w.base, w.tip):
                continue
            if on_segment(q, w.base, w.tip):
                report.violations.append(
                    f"site {sites.names[si]} lies inside the window of "
                    f"site {sites.names[w.pair.site]}")
        for v in poly.vertices:
            if v in (w.base, w.tip):
                continue
            if on_segment(v, w.base, w.tip):
                report.violations.append(
                    f"window of site {sites.names[w.pair.site]} passes through a corner")
    on_walls = [sites.names[si] for si, q in enumerate(sites.points)
                if poly.classify_point(q)[0] == BOUNDARY]
    if on_walls:
        report.notes.append("sites on the walls: " + ", ".join(on_walls))
    return report


@dataclass
class Region:
    id: int
    representative: Point
    visible: FrozenSet[int]      # site indices that see the region
    trapezoids: List[Trap]
    area: Fraction


@dataclass
class VisibilityDecomposition:
    poly: SimplePolygon
    sites: GuardSiteSet
    windows: List[Window]
    regions: List[Region]
    adjacency: Dict[Tuple[int, int], Set[int]]   # region pair -> window indices
    report: DegeneracyReport
    cells: CellComplex

    @property
    def region_count(self) -> int:
        return len(self.regions)


class DecompositionError(ValueError):
    def __init__(self, report: DegeneracyReport):
        super().__init__("; ".join(report.violations) or "degenerate input")
        self.report = report


def build_decomposition(poly: SimplePolygon, sites: GuardSiteSet) -> VisibilityDecomposition:
    """Cut the gallery by all windows and compute V(R) per region."""
    pairs = feasible_pairs(poly, sites)
    windows, report = build_windows(poly, sites, pairs)
    report = check_general_position(poly, sites, windows, report)
    if not report.ok():
        raise DecompositionError(report)
    try:
        cells = CellComplex(poly, [(w.base, w.tip) for w in windows])
        labels, count, adjacency = cells.merge_faces()
    except DegenerateArrangement as exc:
        report.violations.append(str(exc))
        raise DecompositionError(report)

    by_face: Dict[int, List[int]] = {}
    for ti, lab in enumerate(labels):
        by_face.setdefault(lab, []).append(ti)
    regions: List[Region] = []
    for lab in range(count):
        traps = [cells.traps[t] for t in by_face[lab]]
        rep = cells.trap_rep(traps[0])
        visible = frozenset(si for si, q in enumerate(sites.points)
                            if poly.segment_inside(q, rep))
        area = sum((cells.trap_area(t) for t in traps), Fraction(0))
        regions.append(Region(lab, rep, visible, traps, area))
    return VisibilityDecomposition(poly, sites, windows, regions, adjacency,
                                   report, cells)


@dataclass
class DualGraph:
    edges: Dict[int, Set[int]]        # region id -> successors (smaller views)
    sinks: List[int]

    def successors(self, rid: int) -> Set[int]:
        return self.edges.get(rid, set())


def dual_graph_and_sinks(dec: VisibilityDecomposition) -> DualGraph:
    """Direct each adjacency toward the smaller visible-site set.

    Along every shared boundary edge the two sets must differ by exactly the
    site owning the separating window; anything else means an undetected
    degeneracy and aborts the run.
    """
    edges: Dict[int, Set[int]] = {r.id: set() for r in dec.regions}
    incoming: Dict[int, Set[int]] = {r.id: set() for r in dec.regions}
    for (r1, r2), wins in sorted(dec.adjacency.items()):
        v1 = dec.regions[r1].visible
        v2 = dec.regions[r2].visible
        diff = v1 ^ v2
        expected = {dec.windows[w].pair.site for w in wins}
        if len(diff) != 1 or diff != expected:
            raise IncomparableNeighbors(
                f"regions {r1} and {r2} differ by {sorted(diff)} across windows of {sorted(expected)}")
        if v2 < v1:
            edges[r1].add(r2)
            incoming[r2].add(r1)
        else:
            edges[r2].add(r1)
            incoming[r1].add(r2)
    # acyclicity: every edge strictly decreases |V|, but verify explicitly
    order: List[int] = []
    pending = {rid: len(incoming[rid]) for rid in edges}
    stack = sorted(rid for rid, deg in pending.items() if deg == 0)
    while stack:
        rid = stack.pop()
        order.append(rid)
        for nxt in edges[rid]:
            pending[nxt] -= 1
            if pending[nxt] == 0:
                stack.append(nxt)
    if len(order) != len(edges):
        raise IncomparableNeighbors("dual graph has a cycle")
    sinks = sorted(rid for rid, succ in edges.items() if not succ)
    for s1 in sinks:
        for s2 in sinks:
            if s1 < s2 and (s1, s2) in dec.adjacency:
                raise IncomparableNeighbors(f"sink regions {s1} and {s2} are adjacent")
    return DualGraph(edges, sinks)
