"""Three unconditional certificates of normality.

A gallery is normal when every guard configuration that sees all walls sees
the whole interior.  Each test below alone certifies that, for every site
set: at most two reflex corners, a nonempty kernel (star gallery), or a set
of wall points with convex views whose views cover the gallery.  All three
failing decides nothing.
"""

from normalgallery import FIXTURES, spiral_gallery, sufficient_conditions

for name in ("square", "lshape", "fig2_right", "gamma6", "gamma8"):
    flags = sufficient_conditions(FIXTURES[name].polygon)
    verdict = "NORMAL" if flags["implies_normal"] else "inconclusive"
    print(f"{name:12s} reflex<=2: {flags['reflex_le_2']!s:5s} "
          f"star: {flags['star']!s:5s} convex cover: {flags['convex_cover']!s:5s} "
          f"=> {verdict}")

print()
print("spirals stay normal while their reflex corner count grows:")
for turns in (1, 2, 3):
    poly = spiral_gallery(turns)
    flags = sufficient_conditions(poly)
    print(f"  {turns} turn(s): {poly.n} corners, "
          f"{len(poly.reflex_corners())} reflex, convex cover: {flags['convex_cover']}")
