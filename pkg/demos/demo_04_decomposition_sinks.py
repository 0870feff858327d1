"""The visibility decomposition and its sinks.

Every site paired with a visible reflex corner whose walls lie on one side
of the sight line contributes a window; the windows cut the gallery into
regions inside which the set of seeing sites V(R) is constant.  Directing
each adjacency toward the smaller V gives an acyclic dual graph whose sinks
are the minimally seen regions, and only those matter for normality.
"""

from normalgallery import (FIXTURES, build_decomposition, build_windows,
                           dual_graph_and_sinks, feasible_pairs)

fx = FIXTURES["gamma8"]
poly, sites = fx.polygon, fx.site_set()

pairs = feasible_pairs(poly, sites)
print(f"gamma8: {len(pairs)} feasible (site, reflex corner) pairs")
windows, report = build_windows(poly, sites, pairs)
for w in windows:
    print(f"  window of site {sites.names[w.pair.site]}: "
          f"{tuple(map(str, w.base))} -> {tuple(map(str, w.tip))}")
for note in report.notes:
    print("  note:", note)

dec = build_decomposition(poly, sites)
print(f"{dec.region_count} regions; areas sum to {sum(r.area for r in dec.regions)}"
      f" = gallery area {poly.area()}")

dual = dual_graph_and_sinks(dec)
print(f"{len(dual.sinks)} sinks:")
for rid in dual.sinks:
    region = dec.regions[rid]
    hidden_from = sorted(sites.names[i] for i in range(len(sites))
                         if i not in region.visible)
    print(f"  region {rid}: hidden exactly from {{{', '.join(hidden_from)}}}, "
          f"representative {tuple(map(str, region.representative))}")
