"""Render the fixture galleries to SVG.

Writes drawings next to this script: walls solid, windows dashed, sinks
shaded, witness sites starred and the dark point circled.
"""

from pathlib import Path

from normalgallery import FIXTURES, build_decomposition, check_normal_wrt, dual_graph_and_sinks
from normalgallery.svgrender import render_decomposition, render_gallery

out_dir = Path(__file__).resolve().parent / "output"
out_dir.mkdir(exist_ok=True)

for name in ("gamma6", "gamma8", "gamma9", "fig2_left", "fig2_right"):
    fx = FIXTURES[name]
    (out_dir / f"{name}.svg").write_text(render_gallery(fx.polygon, fx.site_set()))

fx = FIXTURES["gamma8"]
report = check_normal_wrt(fx.polygon, fx.site_set())
svg = render_decomposition(report.decomposition, sinks=report.dual.sinks,
                           witness=report)
(out_dir / "gamma8_witness.svg").write_text(svg)

fx = FIXTURES["gamma9"]
sites = fx.site_set([str(i) for i in range(1, 10)])
dec = build_decomposition(fx.polygon, sites)
dual = dual_graph_and_sinks(dec)
(out_dir / "gamma9_sinks.svg").write_text(render_decomposition(dec, sinks=dual.sinks))

print("wrote", len(list(out_dir.glob("*.svg"))), "drawings to", out_dir)
