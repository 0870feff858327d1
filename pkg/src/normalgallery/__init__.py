"""Exact visibility tools for normal galleries.

A gallery (simple polygon) is *normal with respect to a site set* when every
guard configuration drawn from the sites that sees the whole boundary also
sees the whole interior.  The package decides this exactly over rational
coordinates, provides unconditional sufficient conditions (few reflex
corners, star-shapedness, convex-view covers), and ships an independent
brute-force oracle plus the classical example galleries.
"""

from .geometry import Point, frac, orient, pt
from .polygon import (BoundaryPos, IntervalSet, PointOutside, PolygonError,
                      SimplePolygon, interval_union_measure)
from .visibility import (Kernel, View, convex_cover_certificate, kernel,
                         view_is_convex, visibility_polygon, wall_view)
from .decomposition import (DegeneracyReport, FeasiblePair, GuardSiteSet,
                            VisibilityDecomposition, Window,
                            build_decomposition, build_windows,
                            check_general_position, dual_graph_and_sinks,
                            feasible_pairs)
from .normality import (NORMAL, NOT_NORMAL, INCONCLUSIVE_DEGENERATE,
                        NormalityReport, WitnessSet, check_normal_wrt,
                        covers_walls, hidden_components_convex,
                        minimal_witness, sufficient_conditions)
from .oracle import (SampleGrid, brute_force_normal_wrt, hidden_components,
                     naive_visible, oracle_wall_view)
from .fixtures import FIXTURES, get, spiral_gallery

__all__ = [
    "Point", "pt", "frac", "orient",
    "SimplePolygon", "BoundaryPos", "IntervalSet", "interval_union_measure",
    "PolygonError", "PointOutside",
    "View", "Kernel", "visibility_polygon", "wall_view", "kernel",
    "view_is_convex", "convex_cover_certificate",
    "GuardSiteSet", "FeasiblePair", "Window", "DegeneracyReport",
    "VisibilityDecomposition", "feasible_pairs", "build_windows",
    "check_general_position", "build_decomposition", "dual_graph_and_sinks",
    "NORMAL", "NOT_NORMAL", "INCONCLUSIVE_DEGENERATE",
    "NormalityReport", "WitnessSet", "covers_walls", "check_normal_wrt",
    "minimal_witness", "sufficient_conditions", "hidden_components_convex",
    "SampleGrid", "naive_visible", "oracle_wall_view",
    "brute_force_normal_wrt", "hidden_components",
    "FIXTURES", "get", "spiral_gallery",
]
