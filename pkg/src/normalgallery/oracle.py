"""Independent brute-force verifiers.

Nothing here shares geometry code paths with the main pipeline: point
location is done by winding number instead of crossing parity, sight tests
split at every edge line instead of at boundary intersections, and wall
views are rebuilt edge by edge from critical parameters.  Agreement between
the two stacks is evidence, not tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .decomposition import (DecompositionError, GuardSiteSet,
                            IncomparableNeighbors, build_decomposition)
from .geometry import Point, cross, lerp, on_segment, orient, sub
from .polygon import SimplePolygon


class CapExceeded(ValueError):
    pass


class _FastPoly:
    """Integer-scaled polygon for the grid-heavy oracle sweeps.

    Vertices are multiplied by their common denominator once; query points
    are carried as homogeneous integer triples (X, Y, W).  All tests reduce
    to integer sign computations, so this is exactly the same arithmetic as
    the Fraction path, minus the per-operation normalisation cost.
    """

    def __init__(self, poly: SimplePolygon):
        d = 1
        for v in poly.vertices:
            d = lcm(d, v.x.denominator, v.y.denominator)
        self.scale = d
        self.edges = []
        n = poly.n
        for i in range(n):
            a = poly.vertices[i]
            b = poly.vertices[(i + 1) % n]
            self.edges.append((int(a.x * d), int(a.y * d),
                               int(b.x * d), int(b.y * d)))

    def hom(self, p: Point) -> Tuple[int, int, int]:
        qx = p.x * self.scale
        qy = p.y * self.scale
        w = lcm(qx.denominator, qy.denominator)
        return (qx.numerator * (w // qx.denominator),
                qy.numerator * (w // qy.denominator), w)

    def locate(self, X: int, Y: int, W: int) -> int:
        """-1 exterior, 0 on the walls, +1 interior."""
        wn = 0
        for ax, ay, bx, by in self.edges:
            axw, ayw = ax * W, ay * W
            bxw, byw = bx * W, by * W
            o = (bx - ax) * (Y - ayw) - (by - ay) * (X - axw)
            if o == 0:
                if (min(axw, bxw) <= X <= max(axw, bxw)
                        and min(ayw, byw) <= Y <= max(ayw, byw)):
                    return 0
                continue
            if ayw <= Y:
                if byw > Y and o > 0:
                    wn += 1
            else:
                if byw <= Y and o < 0:
                    wn -= 1
        return 1 if wn != 0 else -1

    def inside(self, X: int, Y: int, W: int) -> bool:
        return self.locate(X, Y, W) >= 0

    def orient_edge(self, k: int, X: int, Y: int, W: int) -> int:
        ax, ay, bx, by = self.edges[k]
        o = (bx - ax) * (Y - ay * W) - (by - ay) * (X - ax * W)
        return (o > 0) - (o < 0)


@lru_cache(maxsize=128)
def _fast(poly: SimplePolygon) -> _FastPoly:
    return _FastPoly(poly)


def _on_any_edge(poly: SimplePolygon, p: Point) -> bool:
    return any(on_segment(p, a, b) for _, a, b in poly.edges())


def winding_inside(poly: SimplePolygon, p: Point) -> bool:
    """Closed-polygon membership by winding number (boundary counts as in)."""
    f = _fast(poly)
    return f.inside(*f.hom(p))


def naive_visible(poly: SimplePolygon, p: Point, q: Point) -> bool:
    """Sight test by splitting pq at every wall line and checking sub-midpoints."""
    f = _fast(poly)
    hp, hq = f.hom(p), f.hom(q)
    if not f.inside(*hp) or not f.inside(*hq):
        return False
    if p == q:
        return True
    d = sub(q, p)
    ts = {Fraction(0), Fraction(1)}
    for k, (_, a, b) in enumerate(poly.edges()):
        if f.orient_edge(k, *hp) * f.orient_edge(k, *hq) < 0:
            e = sub(b, a)
            t = cross(sub(a, p), e) / cross(d, e)
            ts.add(t)
    cuts = sorted(ts)
    for t0, t1 in zip(cuts, cuts[1:]):
        mid = lerp(p, q, (t0 + t1) / 2)
        if not f.inside(*f.hom(mid)):
            return False
    return True


def oracle_wall_view(poly: SimplePolygon, p: Point) -> List[Tuple[Fraction, Fraction]]:
    """Visible boundary intervals, rebuilt per edge from critical parameters.

    Visibility along an edge can only change where the sight line passes a
    corner, so testing one point per critical sub-interval is exact.
    """
    out: List[Tuple[Fraction, Fraction]] = []
    for i, a, b in poly.edges():
        e = sub(b, a)
        ts = {Fraction(0), Fraction(1)}
        for v in poly.vertices:
            if v == p:
                continue
            if orient(p, v, a) * orient(p, v, b) < 0:
                d = sub(v, p)
                # parameter on the edge where the line through p and v crosses it
                s = cross(sub(a, p), d) / cross(d, e)
                ts.add(s)
        cuts = sorted(ts)
        mids_visible = [naive_visible(poly, p, lerp(a, b, (t0 + t1) / 2))
                        for t0, t1 in zip(cuts, cuts[1:])]
        cuts_visible = [naive_visible(poly, p, lerp(a, b, t)) for t in cuts]
        for j, vis in enumerate(mids_visible):
            if vis:
                out.append((i + cuts[j], i + cuts[j + 1]))
        for j, vis in enumerate(cuts_visible):
            if vis:
                left = j > 0 and mids_visible[j - 1]
                right = j < len(mids_visible) and mids_visible[j]
                if not left and not right:
                    out.append((i + cuts[j], i + cuts[j]))
    return out


def merged_measure(length: int, pairs: Sequence[Tuple[Fraction, Fraction]]) -> Fraction:
    """Sorted endpoint sweep; pieces already live within [0, length]."""
    spans = sorted(pairs)
    total = Fraction(0)
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for a, b in spans:
        if hi is None or a > hi:
            if hi is not None:
                total += hi - lo
            lo, hi = a, b
        elif b > hi:
            hi = b
    if hi is not None:
        total += hi - lo
    return total


def naive_pairwise_union(length: int, pairs: Sequence[Tuple[Fraction, Fraction]]):
    """Quadratic pairwise merging until a fixed point; returns sorted pieces."""
    pieces = [[Fraction(a) % length, (Fraction(a) % length) + (Fraction(b) - Fraction(a))]
              for a, b in pairs]
    split: List[List[Fraction]] = []
    for a, b in pieces:
        if b <= length:
            split.append([a, b])
        else:
            split.append([a, Fraction(length)])
            split.append([Fraction(0), b - length])
    changed = True
    while changed:
        changed = False
        for i in range(len(split)):
            for j in range(i + 1, len(split)):
                a1, b1 = split[i]
                a2, b2 = split[j]
                if a2 <= b1 and a1 <= b2:
                    split[i] = [min(a1, a2), max(b1, b2)]
                    del split[j]
                    changed = True
                    break
            if changed:
                break
    split.sort()
    return [(a, b) for a, b in split]


def oracle_covers_walls(poly: SimplePolygon, wall_views: Sequence[Sequence]) -> bool:
    pairs = [iv for view in wall_views for iv in view]
    return merged_measure(poly.n, pairs) == poly.n


@dataclass(frozen=True)
class SampleGrid:
    """Interior lattice points at pitch bbox/k; deterministic for fixed k."""
    resolution: int
    points: Tuple[Point, ...]
    index: Tuple[Tuple[int, int], ...]

    @classmethod
    def build(cls, poly: SimplePolygon, k: int = 64) -> "SampleGrid":
        xmin, ymin, xmax, ymax = poly.bbox()
        dx = (xmax - xmin) / k
        dy = (ymax - ymin) / k
        fast = _fast(poly)
        pts: List[Point] = []
        idx: List[Tuple[int, int]] = []
        for i in range(k + 1):
            for j in range(k + 1):
                q = Point(xmin + i * dx, ymin + j * dy)
                if fast.locate(*fast.hom(q)) == 1:
                    pts.append(q)
                    idx.append((i, j))
        return cls(k, tuple(pts), tuple(idx))


def hidden_components(poly: SimplePolygon, guards: Sequence[Point],
                      grid: Optional[SampleGrid] = None, k: int = 64):
    """Grid points hidden from every guard, clustered by 4-neighbour adjacency.

    Component counts are evidence (stable under grid refinement), not proof.
    """
    grid = grid or SampleGrid.build(poly, k)
    hidden: Dict[Tuple[int, int], Point] = {}
    order = list(range(len(guards)))
    for q, ij in zip(grid.points, grid.index):
        seen_by = next((g for g in order if naive_visible(poly, guards[g], q)), None)
        if seen_by is None:
            hidden[ij] = q
        elif order[0] != seen_by:
            # neighbouring grid points tend to be seen by the same guard
            order.remove(seen_by)
            order.insert(0, seen_by)
    seen: Set[Tuple[int, int]] = set()
    clusters: List[List[Point]] = []
    for ij in sorted(hidden):
        if ij in seen:
            continue
        stack = [ij]
        seen.add(ij)
        cluster = []
        while stack:
            ci, cj = stack.pop()
            cluster.append(hidden[(ci, cj)])
            for nb in ((ci + 1, cj), (ci - 1, cj), (ci, cj + 1), (ci, cj - 1)):
                if nb in hidden and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        clusters.append(cluster)
    clusters.sort(key=lambda c: (-len(c), min(c)))
    return clusters


@dataclass
class BruteForceResult:
    normal: bool
    witness: Optional[Tuple[int, ...]] = None     # site indices
    hidden_point: Optional[Point] = None
    candidates_from: str = "decomposition"


def brute_force_normal_wrt(poly: SimplePolygon, sites: GuardSiteSet,
                           cap: int = 12, grid_k: int = 48) -> BruteForceResult:
    """Enumerate all nonempty site subsets: covering the walls while hiding an
    interior point refutes normality.

    Hidden-point candidates are the decomposition representatives when the
    input is in general position (complete by the region argument), otherwise
    a sample grid (evidence grade).
    """
    m = len(sites)
    if m > cap:
        raise CapExceeded(f"{m} sites exceeds the cap of {cap}")
    views = [oracle_wall_view(poly, q) for q in sites.points]

    candidates: List[Point]
    source = "decomposition"
    try:
        dec = build_decomposition(poly, sites)
        candidates = [r.representative for r in dec.regions]
    except (DecompositionError, IncomparableNeighbors):
        source = "grid"
        candidates = list(SampleGrid.build(poly, grid_k).points)

    sees_mask = []
    for q in candidates:
        mask = 0
        for i, g in enumerate(sites.points):
            if naive_visible(poly, g, q):
                mask |= 1 << i
        sees_mask.append(mask)

    subsets = sorted(range(1, 1 << m), key=lambda s: (bin(s).count("1"), s))
    for subset in subsets:
        chosen = [i for i in range(m) if subset >> i & 1]
        if not oracle_covers_walls(poly, [views[i] for i in chosen]):
            continue
        for q, mask in zip(candidates, sees_mask):
            if mask & subset == 0:
                return BruteForceResult(False, tuple(chosen), q, source)
    return BruteForceResult(True, candidates_from=source)
