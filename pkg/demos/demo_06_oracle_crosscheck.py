"""The independent brute-force oracle.

The oracle re-derives everything with separate machinery: winding-number
point location, sight tests split at wall lines, per-edge wall views, and
plain subset enumeration.  Agreement with the sink algorithm on random
galleries is the package's core evidence of correctness.
"""

import random

from normalgallery import (FIXTURES, brute_force_normal_wrt, check_normal_wrt,
                           hidden_components)
from normalgallery.fixtures import random_general_position_instance

fx = FIXTURES["gamma8"]
result = brute_force_normal_wrt(fx.polygon, fx.site_set())
names = sorted(fx.site_set().names[i] for i in result.witness)
print("gamma8 brute force:", "normal" if result.normal else "not normal",
      "witness:", ", ".join(names))

guards = [fx.sites[k] for k in ("4", "5", "8")]
comps = hidden_components(fx.polygon, guards, k=96)
print(f"grid evidence: {len(comps)} hidden cluster(s), "
      f"largest has {len(comps[0])} grid points")

rng = random.Random(42)
print("\nrandom cross-checks:")
for i in range(5):
    poly, sites = random_general_position_instance(rng, n_max=12, m_max=8)
    verdict = check_normal_wrt(poly, sites).verdict
    brute = brute_force_normal_wrt(poly, sites)
    agree = (verdict == "NORMAL") == brute.normal
    print(f"  n={poly.n} m={len(sites)}: {verdict}, oracle agrees: {agree}")
