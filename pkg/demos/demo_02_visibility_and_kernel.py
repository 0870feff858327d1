"""Views, wall views and the kernel.

The view of a site is its exact visibility polygon under closed visibility
(sight lines may graze corners and run along walls).  The wall view is the
part of the boundary the site sees, as intervals of the combinatorial
boundary parameterisation edge + t in [0, n).
"""

from normalgallery import FIXTURES, kernel, pt, visibility_polygon, wall_view

lshape = FIXTURES["lshape"].polygon

view = visibility_polygon(lshape, pt(4, 1))
print("view of (4,1):", [tuple(map(str, v)) for v in view.polygon.vertices])
print("  area:", view.polygon.area(), "of", lshape.area())

wv = wall_view(lshape, pt(4, 1))
print("wall view of (4,1):", wv)
print("  measure:", wv.measure, "of", lshape.n)
print("  full boundary?", wv.is_full())
print("wall view of the corner (0,0) is full:", wall_view(lshape, pt(0, 0)).is_full())

k = kernel(lshape)
print("kernel of the L-shape:", [tuple(map(str, v)) for v in k.points])

gamma6 = FIXTURES["gamma6"].polygon
print("kernel of the pinwheel gamma6 is empty:", kernel(gamma6).is_empty())
