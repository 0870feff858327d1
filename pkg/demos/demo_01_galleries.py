"""Galleries are simple polygons with exact rational corners.

Validation enforces counter-clockwise order, merges collinear wall chains and
rejects self-intersections; every downstream query is exact.
"""

from normalgallery import FIXTURES, SimplePolygon, pt

lshape = FIXTURES["lshape"].polygon
print("L-shaped gallery:", [tuple(map(str, v)) for v in lshape.vertices])
print("  area:", lshape.area())
print("  reflex corners:", [str(lshape.vertices[i]) for i in lshape.reflex_corners()])

print("  (1,1) is", lshape.classify_point(pt(1, 1))[0])
print("  (3,3) is", lshape.classify_point(pt(3, 3))[0])
state, pos = lshape.classify_point(pt(2, 3))
print(f"  (2,3) is {state} at edge {pos.edge}, t={pos.t}")

print("  sight (0,0)->(4,2) stays inside:", lshape.segment_inside(pt(0, 0), pt(4, 2)))
print("  sight (4,1)->(1,4) stays inside:", lshape.segment_inside(pt(4, 1), pt(1, 4)))

hit, hit_pos = lshape.ray_shoot(pt(2, 2), pt(-2, 1))
print(f"  ray from the reflex corner along (-2,1) exits at {hit} "
      f"(edge {hit_pos.edge}, t={hit_pos.t})")

bad = [(0, 0), (4, 4), (4, 0), (0, 4)]
try:
    SimplePolygon.validate(bad)
except Exception as exc:
    print("bowtie rejected:", exc)
