"""
The twisted reflection module of D4 and supersingularity
========================================================

For the simply laced data the discrete simple module is not one
dimensional: it is the sign twist of the reflection representation.
This script builds it for D4, reduces it mod 5, splits the reduction
into residual characters, and certifies nilpotency of the central
action on every generating orbit.
"""

from heckelab import (build_root_datum, decompose_at_v0, is_supersingular,
                      reflection_module)

d = build_root_datum("D", 4)
m = reflection_module(d).star_twist()
m.check_relations()
print("module dimension:", m.dim)

# at v=0 the action becomes triangular and the diagonal splits into
# pairwise distinct residual characters, one per node plus one more
comps = decompose_at_v0(m)
print("components at v=0:")
for c in comps:
    print("  ", c.label())

# reduce mod 5 and test the central orbit sums for nilpotency
mod = m.reduce_mod_p(5)
flag, info = is_supersingular(mod, exhaustive=True)
print()
print("supersingular:", flag, " exhaustive:", not info["sampled"])
for entry in info["orbits"]:
    print("  orbit of", entry["orbit"], "size", entry["orbit_size"],
          "nilpotency degree", entry["nilpotency_degree"])

# the same test run on the special character of a non simply laced
# datum comes back negative: discrete but not supersingular
from heckelab import HeckeAlgebra, enumerate_characters

H = HeckeAlgebra(build_root_datum("G", 2))
special = next(ch for ch in enumerate_characters(H, "generic")
               if ch.is_special())
smod = special.as_module(H).reduce_mod_p(5)
sflag, sinfo = is_supersingular(smod)
print()
print("G2 special character supersingular:", sflag)
print("central value on the first orbit is a nonzero scalar:",
      sinfo["orbits"][0]["nilpotent"] is False)
