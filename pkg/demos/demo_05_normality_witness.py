"""Deciding normality and extracting a minimal witness.

The nine-corner gallery is normal with respect to its corners: any corner
configuration seeing all walls sees everything.  Adding one extra wall site
G breaks that; {G, 6, 9} see every wall while a pocket near the middle stays
dark.
"""

from normalgallery import FIXTURES, check_normal_wrt, minimal_witness

fx = FIXTURES["gamma9"]
corners = fx.site_set([str(i) for i in range(1, 10)])
report = check_normal_wrt(fx.polygon, corners)
print("gamma9 w.r.t. its corners:", report.verdict,
      f"({report.regions} regions, {report.sinks} sinks, "
      f"{report.checked} sink cover checks)")

with_g = fx.site_set([str(i) for i in range(1, 10)] + ["G"])
report = check_normal_wrt(fx.polygon, with_g)
print("gamma9 w.r.t. corners + G:", report.verdict)
print("  first failing sink's complement:", ", ".join(report.witness.names))

witness = minimal_witness(fx.polygon, with_g, report)
print("  minimal witness:", ", ".join(witness.names))
print("  covered walls measure:", witness.covered_walls.measure, "of", fx.polygon.n)
print("  dark point:", tuple(map(str, witness.uncovered_point)))
print("  witness entirely on the walls:", witness.all_on_boundary)
