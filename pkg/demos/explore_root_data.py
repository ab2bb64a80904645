"""
Root data, node classes, and length-zero symmetries
===================================================

Builds a handful of affine root data and prints the combinatorial
facts the rest of the library is driven by.
"""

from heckelab import (aut_group, build_root_datum, decorated_aut_group,
                      effective_lattice)

d = build_root_datum("C", 2)
print("datum:", d.label())
print("cartan matrix:")
for row in d.cartan:
    print("  ", row)
print("affine cartan matrix:")
for row in d.affine_cartan:
    print("  ", row)

# nodes that are conjugate under the affine diagram symmetries share a
# class, and parameters are constant on classes
print("node classes:", d.classes)
print("positive roots:", len(d.pos_roots))
print("highest root:", d.theta, " highest coroot:", d.theta_coroot)

G = aut_group(d)
print("length-zero group:", G.structure(), "order", len(G.elements))

# an unequal decoration can break part of the symmetry
d2 = build_root_datum("C", 2, weights=[1, 2, 3])
print()
print("datum:", d2.label())
print("class weights:", d2.class_weights)
print("decorated length-zero group:", decorated_aut_group(d2).structure())
print("effective lattice rows:", effective_lattice(d2))

# the same weights given per node must be constant on classes
mapping = {0: 1, 1: 2, 2: 1}
d3 = build_root_datum("C", 2, weights=mapping)
print()
print("per-node weights", mapping, "normalize to", d3.class_weights)

# D4 has the largest symmetry group among the supported data
d4 = build_root_datum("D", 4)
print()
print("datum:", d4.label())
G4 = aut_group(d4)
print("length-zero group:", G4.structure())
print("node orbits under the length-zero group:", G4.node_orbits())
