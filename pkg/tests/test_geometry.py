import random
from fractions import Fraction as F

import pytest

from normalgallery.geometry import (EMPTY, OVERLAP, POINT, convex_hull, frac,
                                    intersect_segments, on_segment, orient,
                                    polygon_area2, pt)


def test_orient_examples():
    assert orient(pt(0, 0), pt(1, 0), pt(0, 1)) == 1
    assert orient(pt(0, 0), pt(1, 1), pt(2, 2)) == 0
    # cross((-2,1),(0,1)) = -2: the half-plane test used for feasible pairs
    assert orient(pt(4, 1), pt(2, 2), pt(4, 2)) == -1


def test_orient_antisymmetric_and_translation_invariant():
    rng = random.Random(7)
    for _ in range(300):
        pts = [pt(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(3)]
        p, q, r = pts
        assert orient(p, q, r) == -orient(p, r, q)
        dx, dy = F(rng.randint(-50, 50), 7), F(rng.randint(-50, 50), 3)
        shifted = [pt(a.x + dx, a.y + dy) for a in pts]
        assert orient(*pts) == orient(*shifted)


def test_intersect_segments_examples():
    kind, p = intersect_segments(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0))
    assert kind == POINT and p == pt(1, 1)
    kind, _ = intersect_segments(pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0))
    assert kind == EMPTY
    kind, seg = intersect_segments(pt(0, 0), pt(2, 0), pt(1, 0), pt(3, 0))
    assert kind == OVERLAP and seg == (pt(1, 0), pt(2, 0))


def test_intersect_segments_symmetric_and_on_both():
    rng = random.Random(11)
    for _ in range(400):
        segs = [(pt(rng.randint(0, 8), rng.randint(0, 8)),
                 pt(rng.randint(0, 8), rng.randint(0, 8))) for _ in range(2)]
        (a, b), (c, d) = segs
        if a == b or c == d:
            continue
        k1, p1 = intersect_segments(a, b, c, d)
        k2, p2 = intersect_segments(c, d, a, b)
        assert k1 == k2
        if k1 == POINT:
            assert p1 == p2
            assert on_segment(p1, a, b) and on_segment(p1, c, d)
        elif k1 == OVERLAP:
            for q in p1:
                assert on_segment(q, a, b) and on_segment(q, c, d)


def test_frac_rejects_floats():
    with pytest.raises(TypeError):
        frac(0.1)
    assert frac("3/7") == F(3, 7)
    assert frac("0.25") == F(1, 4)


def test_convex_hull_and_area():
    pts = [pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4), pt(2, 2), pt(1, 3)]
    hull = convex_hull(pts)
    assert set(hull) == {pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)}
    assert polygon_area2(hull) == 32
