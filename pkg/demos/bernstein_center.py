"""
Bernstein elements and the center
=================================

Walks through the commutative subalgebra sitting inside the extended
affine Hecke algebra of C2 and checks its headline properties by
direct computation.
"""

from heckelab import (ExtWeylElt, HeckeAlgebra, build_root_datum,
                      dominant_monoid_generators)

d = build_root_datum("C", 2, weights=[2, 1, 1])
H = HeckeAlgebra(d)

# for a dominant coweight the element is a single twisted basis vector
lam = (1, 0)
e = H.bernstein(lam)
t_lam = ExtWeylElt.translation(d, lam)
print("E_(1,0) equals the twisted basis vector at t_(1,0):",
      e == H.star_t(t_lam))
print("its expansion in the plain T basis has", len(e.terms), "terms")

# for a general coweight it is a normalized mixed product instead
mixed = H.bernstein((-1, 1))
print()
print("E_(-1,1) support size:", len(mixed.terms))

# the construction splits a coweight into a dominant difference; the
# normalization makes the answer independent of that choice
plus, minus = H.dominant_decomposition((-1, 1))
print("decomposition of (-1,1):", plus, "minus", minus)

# any two of the elements commute
a = H.bernstein((1, -1))
b = H.bernstein((0, 1))
print()
print("E_(1,-1) E_(0,1) == E_(0,1) E_(1,-1):", a * b == b * a)

# and on a shared dominant chamber they multiply additively
lam, mu = (1, 0), (0, 1)
total = tuple(x + y for x, y in zip(lam, mu))
print("E_lam E_mu == E_(lam+mu):",
      H.bernstein(lam) * H.bernstein(mu) == H.bernstein(total))

# summing over a full orbit of coweights gives a central element
gens = dominant_monoid_generators(d)
print()
print("dominant generators:", gens)
z = H.central(gens[0])
print("z = orbit sum over", gens[0], " support size:", len(z.terms))

s1 = H.t_word((1,))
print("z commutes with T_1:", z * s1 == s1 * z)
w = ExtWeylElt.from_word(d, (0, 1, 2))
tw = H.t(w)
print("z commutes with T_{s0 s1 s2}:", z * tw == tw * z)
print("coefficients polynomial and even:",
      z.all_coeffs_polynomial(), z.all_coeffs_even())
