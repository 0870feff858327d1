import random
from fractions import Fraction as F

import pytest

from normalgallery.geometry import pt
from normalgallery.polygon import (BOUNDARY, EXTERIOR, INTERIOR, BoundaryPos,
                                   DegenerateAlongEdge, IntervalSet, NotSimple,
                                   PointOutside, SimplePolygon, TooFewVertices,
                                   ZeroLengthEdge, interval_union_measure)

L = SimplePolygon.validate([(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)])
SQUARE = SimplePolygon.validate([(0, 0), (4, 0), (4, 4), (0, 4)])


def test_validate_square_and_lshape():
    assert SQUARE.reflex_corners() == []
    assert L.reflex_corners() == [3]
    assert L.vertices[3] == pt(2, 2)
    assert L.area() == 12


def test_validate_rejects_bowtie():
    with pytest.raises(NotSimple):
        SimplePolygon.validate([(0, 0), (4, 4), (4, 0), (0, 4)])


def test_validate_rejects_tiny_and_zero_edges():
    with pytest.raises(TooFewVertices):
        SimplePolygon.validate([(0, 0), (1, 1)])
    with pytest.raises(ZeroLengthEdge):
        SimplePolygon.validate([(0, 0), (0, 0), (1, 1), (0, 1)])
    with pytest.raises(TooFewVertices):
        SimplePolygon.validate([(0, 0), (1, 1), (2, 2)])


def test_validate_reverses_clockwise_and_merges_collinear():
    poly = SimplePolygon.validate([(0, 4), (4, 4), (4, 0), (2, 0), (0, 0)])
    assert poly.area() > 0
    # the collinear chain (4,0)-(2,0)-(0,0) collapses to one edge
    assert poly.n == 4


def test_classify_point():
    assert L.classify_point(pt(1, 1))[0] == INTERIOR
    assert L.classify_point(pt(3, 3))[0] == EXTERIOR
    state, pos = L.classify_point(pt(2, 3))
    assert state == BOUNDARY
    assert pos == BoundaryPos(3, F(1, 2))
    # vertices are canonical: t = 0 on the outgoing edge
    assert L.classify_point(pt(2, 2))[1] == BoundaryPos(3, F(0))


def test_segment_inside():
    assert L.segment_inside(pt(0, 0), pt(4, 2))
    assert not L.segment_inside(pt(4, 1), pt(1, 4))
    for a in SQUARE.vertices:
        for b in SQUARE.vertices:
            assert SQUARE.segment_inside(a, b)
    with pytest.raises(PointOutside):
        L.segment_inside(pt(3, 3), pt(1, 1))


def test_segment_inside_symmetric_and_reflexive():
    rng = random.Random(3)
    pts = []
    while len(pts) < 12:
        q = pt(F(rng.randint(0, 16), 4), F(rng.randint(0, 16), 4))
        if L.classify_point(q)[0] != EXTERIOR:
            pts.append(q)
    for a in pts:
        assert L.segment_inside(a, a)
        for b in pts:
            assert L.segment_inside(a, b) == L.segment_inside(b, a)


def test_ray_shoot():
    hit, pos = L.ray_shoot(pt(2, 2), pt(-2, 1))
    assert hit == pt(0, 3) and pos == BoundaryPos(5, F(1, 4))
    hit, pos = L.ray_shoot(pt(2, 2), pt(0, -1))
    assert hit == pt(2, 0) and pos == BoundaryPos(0, F(1, 2))
    hit, _ = SQUARE.ray_shoot(pt(2, 2), pt(1, 0))
    assert hit == pt(4, 2)


def test_ray_shoot_degenerate_along_edge():
    # straight up from (2,0) the ray runs along the inner wall x=2
    with pytest.raises(DegenerateAlongEdge):
        L.ray_shoot(pt(2, 0), pt(0, 1))


def test_interval_union_measure_examples():
    s = IntervalSet(4, [(0, 1), (1, 2), (F(3, 2), 3)])
    _, measure = interval_union_measure(4, [s])
    assert measure == 3
    _, measure = interval_union_measure(4, [IntervalSet(4, [(0, 1), (2, 3)])])
    assert measure == 2
    _, measure = interval_union_measure(4, [])
    assert measure == 0


def test_interval_set_degenerate_and_full():
    s = IntervalSet(6, [(2, 2), (0, 1)])
    assert s.measure == 1
    assert s.covers_value(F(2))
    assert IntervalSet(6, [(0, 6)]).is_full()
    # degenerate points never flip the full-coverage verdict
    almost = IntervalSet(6, [(0, 3), (3, 3), (F(7, 2), 6)])
    assert not almost.is_full()
    assert almost.gaps() == [(F(3), F(7, 2))]


def test_interval_union_against_naive_merge():
    from normalgallery.oracle import naive_pairwise_union
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(3, 9)
        raw = []
        for _ in range(rng.randint(0, 8)):
            a = F(rng.randint(0, 4 * n), 4)
            b = min(a + F(rng.randint(0, 8), 4), F(n))
            if a <= b:
                raw.append((a, b))
        union, measure = interval_union_measure(n, [IntervalSet(n, raw)])
        naive = naive_pairwise_union(n, raw)
        assert sum((b - a for a, b in naive), F(0)) == measure
        assert tuple(naive) == union.intervals
        # full coverage by measure agrees with an explicit gap scan
        assert (measure == n) == (union.gaps() == [])
