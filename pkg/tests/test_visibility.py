import random
from fractions import Fraction as F

import pytest

from normalgallery.fixtures import FIXTURES
from normalgallery.geometry import pt
from normalgallery.polygon import EXTERIOR, IntervalSet, PointOutside
from normalgallery.visibility import (convex_cover_certificate, kernel,
                                      view_is_convex, visibility_polygon,
                                      wall_view)

L = FIXTURES["lshape"].polygon
SQUARE = FIXTURES["square"].polygon


def test_view_of_convex_gallery_is_the_gallery():
    view = visibility_polygon(SQUARE, pt(2, 2))
    assert set(view.polygon.vertices) == set(SQUARE.vertices)


def test_view_from_kernel_point_is_whole_gallery():
    view = visibility_polygon(L, pt(0, 0))
    assert view.polygon.area() == L.area()


def test_view_cut_by_reflex_corner():
    view = visibility_polygon(L, pt(4, 1))
    assert set(view.polygon.vertices) == {pt(0, 0), pt(4, 0), pt(4, 2),
                                          pt(2, 2), pt(0, 3)}
    assert view.polygon.area() == 9


def test_view_rejects_exterior_site():
    with pytest.raises(PointOutside):
        visibility_polygon(L, pt(3, 3))


def test_wall_view_examples():
    assert wall_view(L, pt(0, 0)).is_full()
    wv = wall_view(L, pt(4, 1))
    assert wv == IntervalSet(6, [(0, 3), (F(21, 4), 6)])
    assert wv.measure == F(15, 4)
    assert wall_view(SQUARE, pt(1, 3)).is_full()


def test_kernel_examples():
    assert set(kernel(L).points) == {pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)}
    assert set(kernel(SQUARE).points) == set(SQUARE.vertices)
    assert kernel(FIXTURES["gamma6"].polygon).is_empty()


def test_kernel_point_sees_every_boundary_sample():
    k = kernel(L).sample()
    for i, a, b in L.edges():
        for t in (F(0), F(1, 3), F(2, 3)):
            q = pt(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)
            assert L.segment_inside(k, q)


def test_kernel_is_intersection_of_vertex_views():
    # every kernel vertex must be visible from every polygon vertex
    for corner in kernel(L).points:
        for v in L.vertices:
            assert L.segment_inside(corner, v)


def test_view_is_convex():
    assert view_is_convex(SQUARE, pt(2, 2))
    assert not view_is_convex(L, pt(4, 1))
    # a site on the inner horizontal wall sees exactly the lower rectangle
    assert view_is_convex(L, pt(3, 2))


def test_convex_cover_certificates():
    cert = convex_cover_certificate(L)
    assert cert is not None
    assert set(cert) == {pt(4, 2), pt(2, 4)}
    assert convex_cover_certificate(FIXTURES["fig2_right"].polygon) is not None
    assert convex_cover_certificate(FIXTURES["gamma6"].polygon) is None
    # convex galleries are trivially covered
    assert convex_cover_certificate(SQUARE)


def test_certificate_points_have_convex_covering_views():
    poly = FIXTURES["fig2_right"].polygon
    cert = convex_cover_certificate(poly)
    views = [visibility_polygon(poly, q) for q in cert]
    assert all(v.polygon.is_convex() for v in views)
    rng = random.Random(13)
    hits = 0
    while hits < 60:
        q = pt(F(rng.randint(0, 48), 8), F(rng.randint(0, 40), 8))
        if poly.classify_point(q)[0] == EXTERIOR:
            continue
        hits += 1
        assert any(poly.segment_inside(s, q) for s in cert)


def test_visibility_symmetry():
    rng = random.Random(21)
    for fixture in ("lshape", "gamma6", "fig2_right"):
        poly = FIXTURES[fixture].polygon
        xmin, ymin, xmax, ymax = poly.bbox()
        pts = []
        while len(pts) < 8:
            q = pt(F(rng.randint(int(xmin * 4), int(xmax * 4)), 4),
                   F(rng.randint(int(ymin * 4), int(ymax * 4)), 4))
            if poly.classify_point(q)[0] != EXTERIOR:
                pts.append(q)
        views = {q: visibility_polygon(poly, q).polygon for q in pts}
        for p in pts:
            for q in pts:
                sees = poly.segment_inside(p, q)
                assert sees == poly.segment_inside(q, p)
                assert sees == (views[p].classify_point(q)[0] != EXTERIOR)
