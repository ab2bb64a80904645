"""
One-dimensional characters, extensions, and induced modules
===========================================================

Enumerates the sign-or-parameter characters of a C2 algebra with
unequal weights, tests which of them survive to the extended algebra,
and builds the two-dimensional induced module when one does not.
"""

from heckelab import (HeckeAlgebra, build_root_datum, character_extends,
                      enumerate_characters, induce_character,
                      is_discrete_character)

d = build_root_datum("C", 2, weights=[2, 1, 1])
H = HeckeAlgebra(d)

chars = enumerate_characters(H, "generic")
print("generic characters:", len(chars))
for ch in chars:
    flag, exts = character_extends(H, ch)
    marks = []
    if ch.is_trivial():
        marks.append("trivial")
    if ch.is_special():
        marks.append("special")
    print(" ", ch.label().ljust(16),
          "extends" if flag else "obstructed",
          " ".join(marks))

# the two end nodes carry the same weight here, so the characters that
# separate them cannot extend; induction recovers a simple module of
# dimension two over the full extended algebra
blocked = [ch for ch in chars if not character_extends(H, ch)[0]]
ch = blocked[0]
print()
print("inducing", ch.label())
m = induce_character(H, ch)
m.check_relations()
print("induced dimension:", m.dim)

# mod p the same matrices still satisfy every relation
mod = m.reduce_mod_p(7)
mod.check_relations()
print("mod 7 relations pass")

# discreteness reads off the sign of every translation exponent
print()
for ch in chars:
    flag, info = is_discrete_character(H, ch)
    row = ", ".join("%s: %d" % (e["generator"], e["exponent"])
                    for e in info["rows"])
    print(" ", ch.label().ljust(16), "discrete" if flag else "not discrete",
          " [" + row + "]")

# counting characters of the mod-p reduction instead: every node is
# free to take 0 or -1 independently, so the count jumps from
# 2^classes to 2^nodes.  B3 makes the gap visible, with two node
# classes but four nodes
b = HeckeAlgebra(build_root_datum("B", 3))
print()
print("B3 generic characters:", len(enumerate_characters(b, "generic")))
print("B3 residual characters:", len(enumerate_characters(b, "modp")))
