import random

from normalgallery.decomposition import GuardSiteSet
from normalgallery.fixtures import FIXTURES, random_interior_sites
from normalgallery.geometry import pt
from normalgallery.normality import (INCONCLUSIVE_DEGENERATE, NORMAL,
                                     NOT_NORMAL, check_normal_wrt,
                                     covers_walls, hidden_components_convex,
                                     minimal_witness, sufficient_conditions)

L = FIXTURES["lshape"].polygon


def test_covers_walls():
    assert covers_walls(L, [pt(0, 0)])
    assert not covers_walls(L, [pt(4, 1)])
    g6 = FIXTURES["gamma6"]
    assert covers_walls(g6.polygon, [g6.sites["A"], g6.sites["B"], g6.sites["C"]])


def test_lshape_normal():
    report = check_normal_wrt(L, GuardSiteSet.build(L, {"s": (4, 1)}))
    assert report.verdict == NORMAL
    assert report.regions == 2 and report.sinks == 1


def test_vacuous_when_walls_cannot_be_covered():
    report = check_normal_wrt(L, GuardSiteSet.build(L, {"s": (4, 1)}))
    assert any("vacuously" in n for n in report.notes)


def test_gamma8_not_normal_with_minimal_witness():
    fx = FIXTURES["gamma8"]
    sites = fx.site_set()
    report = check_normal_wrt(fx.polygon, sites)
    assert report.verdict == NOT_NORMAL
    assert report.witness.names == ("4", "5", "8")
    witness = minimal_witness(fx.polygon, sites, report)
    assert witness.names == ("4", "5", "8")
    assert witness.covered_walls.is_full()
    for q in witness.points:
        assert not fx.polygon.segment_inside(q, witness.uncovered_point)


def test_gamma9_normal_for_corners_not_with_G():
    fx = FIXTURES["gamma9"]
    corners = fx.site_set([str(i) for i in range(1, 10)])
    assert check_normal_wrt(fx.polygon, corners).verdict == NORMAL
    with_g = fx.site_set([str(i) for i in range(1, 10)] + ["G"])
    report = check_normal_wrt(fx.polygon, with_g)
    assert report.verdict == NOT_NORMAL
    witness = minimal_witness(fx.polygon, with_g, report)
    assert witness.names == ("6", "9", "G")


def test_degenerate_input_is_inconclusive_without_fallback():
    fx = FIXTURES["tpoly"]
    report = check_normal_wrt(fx.polygon, fx.site_set())
    assert report.verdict == INCONCLUSIVE_DEGENERATE
    fallback = check_normal_wrt(fx.polygon, fx.site_set(), oracle_fallback=True)
    assert fallback.verdict == NORMAL


def test_sufficient_conditions_rows():
    assert sufficient_conditions(L) == {
        "reflex_le_2": True, "star": True, "convex_cover": True,
        "implies_normal": True}
    g6 = sufficient_conditions(FIXTURES["gamma6"].polygon)
    assert g6 == {"reflex_le_2": False, "star": False, "convex_cover": False,
                  "implies_normal": False}
    f2r = sufficient_conditions(FIXTURES["fig2_right"].polygon)
    assert f2r == {"reflex_le_2": False, "star": False, "convex_cover": True,
                   "implies_normal": True}


def test_sufficient_conditions_imply_normal_verdicts():
    rng = random.Random(31)
    poly = FIXTURES["fig2_right"].polygon
    for _ in range(6):
        sites = random_interior_sites(rng, poly, rng.randint(1, 6), denom=32)
        report = check_normal_wrt(poly, sites, oracle_fallback=True)
        assert report.verdict == NORMAL


def test_hidden_component_closure_is_convex_for_gamma8():
    fx = FIXTURES["gamma8"]
    assert hidden_components_convex(fx.polygon, fx.site_set(["4", "5", "8"]))


def test_witness_location_is_reported():
    fx = FIXTURES["gamma8"]
    report = check_normal_wrt(fx.polygon, fx.site_set())
    # all of 4, 5, 8 are corners, hence on the walls
    assert report.witness.all_on_boundary
