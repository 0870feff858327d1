"""Exact vertical cell decomposition of a gallery cut by interior chords.

The interior is sliced at every x where the structure can change (segment
endpoints and chord crossings).  Inside a slab the spanning segments have a
fixed vertical order, and the strip between two consecutive segments is inside
the gallery iff an odd number of walls lies below it.  Cells are merged across
slab boundaries wherever the shared vertical stretch is not blocked by a wall
or a chord, which recovers the faces of the arrangement exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .geometry import OVERLAP, POINT, Point, intersect_segments
from .polygon import SimplePolygon

WALL = "wall"
CHORD = "chord"


@dataclass(frozen=True)
class Seg:
    a: Point
    b: Point
    kind: str
    ref: int

    @property
    def vertical(self) -> bool:
        return self.a.x == self.b.x

    def y_at(self, x: Fraction) -> Fraction:
        return self.a.y + (x - self.a.x) * (self.b.y - self.a.y) / (self.b.x - self.a.x)


@dataclass(frozen=True)
class Trap:
    slab: int
    x0: Fraction
    x1: Fraction
    bot: int   # index into the segment table
    top: int


class DegenerateArrangement(ValueError):
    pass


class CellComplex:
    def __init__(self, poly: SimplePolygon, chords: Sequence[Tuple[Point, Point]],
                 chord_refs: Optional[Sequence[int]] = None):
        self.poly = poly
        segs: List[Seg] = []
        for i, a, b in poly.edges():
            segs.append(Seg(a, b, WALL, i))
        refs = list(chord_refs) if chord_refs is not None else list(range(len(chords)))
        for (a, b), ref in zip(chords, refs):
            if a == b:
                raise ValueError("zero-length chord")
            segs.append(Seg(a, b, CHORD, ref))
        self.segs = segs

        xs: Set[Fraction] = set()
        for s in segs:
            xs.add(s.a.x)
            xs.add(s.b.x)
        nwalls = poly.n
        for i in range(nwalls, len(segs)):
            for j in range(i + 1, len(segs)):
                kind, payload = intersect_segments(segs[i].a, segs[i].b,
                                                   segs[j].a, segs[j].b)
                if kind == POINT:
                    xs.add(payload.x)
                elif kind == OVERLAP:
                    raise DegenerateArrangement("collinear overlapping chords")
        self.xs = sorted(xs)

        # vertical segments grouped by x
        self.verticals: Dict[Fraction, List[Seg]] = {}
        for s in segs:
            if s.vertical:
                self.verticals.setdefault(s.a.x, []).append(s)

        self.traps: List[Trap] = []
        self.slab_traps: List[List[int]] = []
        self.slab_order: List[List[int]] = []
        for k in range(len(self.xs) - 1):
            x0, x1 = self.xs[k], self.xs[k + 1]
            xm = (x0 + x1) / 2
            spanning = [i for i, s in enumerate(segs)
                        if not s.vertical
                        and min(s.a.x, s.b.x) <= x0 and max(s.a.x, s.b.x) >= x1]
            spanning.sort(key=lambda i: segs[i].y_at(xm))
            self.slab_order.append(spanning)
            walls_below = 0
            ids: List[int] = []
            for lo, hi in zip(spanning, spanning[1:]):
                if segs[lo].kind == WALL:
                    walls_below += 1
                if walls_below % 2 == 1:
                    ids.append(len(self.traps))
                    self.traps.append(Trap(k, x0, x1, lo, hi))
            self.slab_traps.append(ids)

    # per-trapezoid helpers ------------------------------------------------

    def trap_interval(self, t: Trap, x: Fraction) -> Tuple[Fraction, Fraction]:
        return self.segs[t.bot].y_at(x), self.segs[t.top].y_at(x)

    def trap_rep(self, t: Trap) -> Point:
        xm = (t.x0 + t.x1) / 2
        lo, hi = self.trap_interval(t, xm)
        return Point(xm, (lo + hi) / 2)

    def trap_area(self, t: Trap) -> Fraction:
        b0, h0 = self.trap_interval(t, t.x0)
        b1, h1 = self.trap_interval(t, t.x1)
        return (t.x1 - t.x0) * ((h0 - b0) + (h1 - b1)) / 2

    def trap_corners(self, t: Trap) -> List[Point]:
        b0, h0 = self.trap_interval(t, t.x0)
        b1, h1 = self.trap_interval(t, t.x1)
        return [Point(t.x0, b0), Point(t.x1, b1), Point(t.x1, h1), Point(t.x0, h0)]

    # faces ----------------------------------------------------------------

    def merge_faces(self):
        """Merge trapezoids into arrangement faces.

        Returns (labels, face_count, adjacency) where labels[i] is the dense
        face id of trapezoid i (ordered by first appearance) and adjacency maps
        an unordered face pair to the set of chord refs separating it.
        """
        parent = list(range(len(self.traps)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def union(i, j):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

        pairs_chords: List[Tuple[int, int, int]] = []  # trap, trap, chord ref

        # within a slab, consecutive inside strips share their middle segment
        for k, ids in enumerate(self.slab_traps):
            for t1, t2 in zip(ids, ids[1:]):
                a, b = self.traps[t1], self.traps[t2]
                if a.top == b.bot:
                    sep = self.segs[a.top]
                    if sep.kind == WALL:
                        raise DegenerateArrangement("interior on both sides of a wall")
                    pairs_chords.append((t1, t2, sep.ref))

        # across slab boundaries
        for k in range(1, len(self.xs) - 1):
            x = self.xs[k]
            left = [t for t in self.slab_traps[k - 1]]
            right = [t for t in self.slab_traps[k]]
            blocks = [(min(s.a.y, s.b.y), max(s.a.y, s.b.y), s)
                      for s in self.verticals.get(x, ())]
            for tl in left:
                il = self.trap_interval(self.traps[tl], x)
                if il[0] >= il[1]:
                    continue
                for tr in right:
                    ir = self.trap_interval(self.traps[tr], x)
                    lo = max(il[0], ir[0])
                    hi = min(il[1], ir[1])
                    if lo >= hi:
                        continue
                    uncovered = hi - lo
                    for blo, bhi, s in blocks:
                        olo, ohi = max(lo, blo), min(hi, bhi)
                        if olo < ohi:
                            uncovered -= ohi - olo
                            if s.kind == CHORD:
                                pairs_chords.append((tl, tr, s.ref))
                    if uncovered > 0:
                        union(tl, tr)

        roots: Dict[int, int] = {}
        labels: List[int] = []
        for i in range(len(self.traps)):
            r = find(i)
            if r not in roots:
                roots[r] = len(roots)
            labels.append(roots[r])
        adjacency: Dict[Tuple[int, int], Set[int]] = {}
        for t1, t2, ref in pairs_chords:
            r1, r2 = labels[t1], labels[t2]
            if r1 == r2:
                raise DegenerateArrangement("chord inside a single face")
            key = (min(r1, r2), max(r1, r2))
            adjacency.setdefault(key, set()).add(ref)
        return labels, len(roots), adjacency
