import random
from fractions import Fraction as F

import pytest

from normalgallery.fixtures import FIXTURES
from normalgallery.geometry import pt
from normalgallery.oracle import (CapExceeded, SampleGrid,
                                  brute_force_normal_wrt, hidden_components,
                                  naive_visible, oracle_wall_view,
                                  winding_inside)
from normalgallery.polygon import EXTERIOR, IntervalSet

L = FIXTURES["lshape"].polygon


def test_naive_visible_examples():
    assert naive_visible(L, pt(0, 0), pt(4, 2))
    assert not naive_visible(L, pt(4, 1), pt(1, 4))
    assert naive_visible(L, pt(3, 1), pt(3, 1))


def test_winding_matches_crossing_classifier():
    rng = random.Random(17)
    for name in ("lshape", "gamma6", "gamma8", "gamma9", "fig2_left", "fig2_right"):
        poly = FIXTURES[name].polygon
        xmin, ymin, xmax, ymax = poly.bbox()
        for _ in range(1000):
            q = pt(F(rng.randint(int(xmin * 8) - 8, int(xmax * 8) + 8), 8),
                   F(rng.randint(int(ymin * 8) - 8, int(ymax * 8) + 8), 8))
            assert winding_inside(poly, q) == (poly.classify_point(q)[0] != EXTERIOR)


def test_naive_visible_agrees_with_segment_inside():
    rng = random.Random(29)
    for name in ("lshape", "gamma6", "gamma8", "fig2_left"):
        poly = FIXTURES[name].polygon
        xmin, ymin, xmax, ymax = poly.bbox()
        inside = []
        while len(inside) < 46:
            q = pt(F(rng.randint(int(xmin * 8), int(xmax * 8)), 8),
                   F(rng.randint(int(ymin * 8), int(ymax * 8)), 8))
            if poly.classify_point(q)[0] != EXTERIOR:
                inside.append(q)
        for a in inside:
            for b in inside:
                assert naive_visible(poly, a, b) == poly.segment_inside(a, b)


def test_hidden_component_counts_stable_under_grid_refinement():
    cases = [("gamma6", ("A", "B", "C"), 32),
             ("fig2_left", ("1", "2", "3", "4", "5"), 48),
             ("lshape", ("s",), 16)]
    for name, guards, k in cases:
        fx = FIXTURES[name]
        pts = [fx.sites[g] for g in guards]
        coarse = hidden_components(fx.polygon, pts, k=k)
        fine = hidden_components(fx.polygon, pts, k=2 * k)
        assert len(coarse) == len(fine), name


def test_oracle_wall_view_matches_main_on_fixtures():
    from normalgallery.visibility import wall_view
    for name, fx in FIXTURES.items():
        for site, q in fx.sites.items():
            got = IntervalSet(fx.polygon.n, oracle_wall_view(fx.polygon, q))
            assert got == wall_view(fx.polygon, q), (name, site)


def test_brute_force_on_fixtures():
    g8 = FIXTURES["gamma8"]
    res = brute_force_normal_wrt(g8.polygon, g8.site_set())
    assert not res.normal
    names = sorted(g8.site_set().names[i] for i in res.witness)
    assert names == ["4", "5", "8"]

    sq = FIXTURES["square"]
    assert brute_force_normal_wrt(sq.polygon, sq.site_set()).normal

    g9 = FIXTURES["gamma9"]
    corners = g9.site_set([str(i) for i in range(1, 10)])
    assert brute_force_normal_wrt(g9.polygon, corners).normal


def test_brute_force_cap():
    fx = FIXTURES["gamma8"]
    with pytest.raises(CapExceeded):
        brute_force_normal_wrt(fx.polygon, fx.site_set(), cap=4)


def test_hidden_components():
    g6 = FIXTURES["gamma6"]
    guards = [g6.sites[k] for k in ("A", "B", "C")]
    comps = hidden_components(g6.polygon, guards, k=48)
    assert len(comps) == 1

    fl = FIXTURES["fig2_left"]
    comps = hidden_components(fl.polygon, list(fl.sites.values()), k=48)
    assert len(comps) == 2

    assert hidden_components(L, [pt(0, 0)], k=32) == []


def test_sample_grid_points_are_interior_and_nested():
    grid = SampleGrid.build(L, 8)
    assert all(L.classify_point(q)[0] == "interior" for q in grid.points)
    fine = SampleGrid.build(L, 16)
    assert set(grid.points) <= set(fine.points)
