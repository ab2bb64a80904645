"""Finite dimensional modules over extended affine Hecke algebras.

Everything here is a *right* module: a module of dimension $n$ assigns to
each distinguished generator an $n \\times n$ matrix, row vectors act on
the right, and consequently $M(xy) = M(x)\\,M(y)$.  Formulas stated for a
left action are converted by transposing.

Two kinds of one dimensional data appear.

* Generic characters send each generator $T_s$ to $-1$ or to $q_s$,
  constantly on conjugacy classes of affine nodes (the braid relations
  force class constancy when $q_s - 1$ is not a zero divisor).  There are
  $2^m$ of them, $m$ the number of classes.
* Mod-$p$ characters live over the reduction at $v = 0$ in characteristic
  $p$; there each $T_s$ may independently go to $0$ or $-1$, giving
  $2^{|S|}$ characters, and the values do not depend on $p$.

A character of the non-extended algebra may or may not extend to the
whole algebra across the length-zero subgroup; when its stabilizer has
index two the induced two dimensional module takes over.  For simply
laced affine diagrams the reflection module realizes the action on the
span of the affine simple roots, and twisting it by the sign involution
produces the module whose reduction at $v = 0$ splits into the family of
characters supported at single nodes.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .errors import (CharacterExtends, DatumMismatch, NegativePowersPresent,
                     NoIndexTwoStructure, NotSimplyLaced, RelationsFail)
from .laurent import Laurent, q_power
from .rootdata import RootDatum
from .hecke import HeckeAlgebra, HeckeElt

LMatrix = tuple[tuple[Laurent, ...], ...]


def _as_algebra(datum) -> HeckeAlgebra:
    if isinstance(datum, HeckeAlgebra):
        return datum
    if isinstance(datum, RootDatum):
        return HeckeAlgebra(datum)
    raise TypeError(f"expected a root datum or Hecke algebra, got {type(datum)!r}")


def _lmat_identity(n: int) -> LMatrix:
    one, zero = Laurent.one(), Laurent.zero()
    return tuple(tuple(one if i == j else zero for j in range(n))
                 for i in range(n))


def _lmat_mul(a: LMatrix, b: LMatrix) -> LMatrix:
    n = len(a)
    k = len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            acc = Laurent.zero()
            for t in range(len(b)):
                if a[i][t].is_zero() or b[t][j].is_zero():
                    continue
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _lmat_add(a: LMatrix, b: LMatrix) -> LMatrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _lmat_scale(a: LMatrix, c: Laurent) -> LMatrix:
    return tuple(tuple(x * c for x in row) for row in a)


def _lmat_eq(a: LMatrix, b: LMatrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def _imat_mul(a, b, p: int):
    n = len(a)
    k = len(b[0])
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(len(b))) % p
                       for j in range(k)) for i in range(n))


def _imat_identity(n: int):
    return tuple(tuple(1 if i == j else 0 for j in range(n))
                 for i in range(n))


class Character:
    """A one dimensional datum, generic or mod-$p$.

    Generic characters hold one sign per conjugacy class of affine nodes
    (``+1`` meaning $T_s \\mapsto q_s$ and ``-1`` meaning $T_s \\mapsto -1$)
    and optionally a tuple of signs on the weight-preserving length-zero
    group, aligned with its element order.  Mod-$p$ characters hold one
    value in $\\{0, -1\\}$ per affine node.
    """

    __slots__ = ("datum", "mode", "values", "omega_signs")

    def __init__(self, datum: RootDatum, mode: str, values: tuple[int, ...],
                 omega_signs: tuple[int, ...] | None = None):
        if mode not in ("generic", "modp"):
            raise ValueError(f"unknown character mode {mode!r}")
        if mode == "generic":
            if len(values) != len(datum.classes):
                raise ValueError("need one sign per node class")
            if any(v not in (1, -1) for v in values):
                raise ValueError("generic character signs must be +1 or -1")
        else:
            if len(values) != datum.rank + 1:
                raise ValueError("need one value per affine node")
            if any(v not in (0, -1) for v in values):
                raise ValueError("mod-p character values must be 0 or -1")
            if omega_signs is not None:
                raise ValueError("mod-p characters carry no length-zero signs")
        if omega_signs is not None and any(v not in (1, -1) for v in omega_signs):
            raise ValueError("length-zero signs must be +1 or -1")
        self.datum = datum
        self.mode = mode
        self.values = tuple(values)
        self.omega_signs = None if omega_signs is None else tuple(omega_signs)

    @staticmethod
    def generic(datum: RootDatum, signs: Sequence[int],
                omega_signs: Sequence[int] | None = None) -> "Character":
        om = None if omega_signs is None else tuple(omega_signs)
        return Character(datum, "generic", tuple(signs), om)

    @staticmethod
    def modp(datum: RootDatum, values: Sequence[int]) -> "Character":
        return Character(datum, "modp", tuple(values))

    def sign_on_class(self, k: int) -> int:
        assert self.mode == "generic"
        return self.values[k]

    def sign_on_node(self, s: int) -> int:
        assert self.mode == "generic"
        return self.values[self.datum.class_of_node[s]]

    def node_value(self, s: int):
        """Value on the standard generator at node ``s``.

        A Laurent polynomial in generic mode, a plain integer mod-$p$.
        """
        if self.mode == "generic":
            if self.sign_on_node(s) == 1:
                return q_power(self.datum.weights[s])
            return Laurent.of_int(-1)
        return self.values[s]

    def is_trivial(self) -> bool:
        if self.mode == "generic":
            return all(v == 1 for v in self.values) and self._omega_trivial()
        return all(v == 0 for v in self.values)

    def is_special(self) -> bool:
        """True for the character sending every generator to ``-1``."""
        if self.mode == "generic":
            return all(v == -1 for v in self.values) and self._omega_trivial()
        return all(v == -1 for v in self.values)

    def _omega_trivial(self) -> bool:
        return self.omega_signs is None or all(v == 1 for v in self.omega_signs)

    def with_omega_signs(self, signs: Sequence[int]) -> "Character":
        assert self.mode == "generic"
        return Character(self.datum, "generic", self.values, tuple(signs))

    def compose_with_node_permutation(self, perm: Sequence[int]) -> "Character":
        """The character $T_s \\mapsto \\chi(T_{\\pi(s)})$ for a diagram
        permutation $\\pi$; only defined when $\\pi$ maps classes to classes."""
        assert self.mode == "generic"
        cls_of = self.datum.class_of_node
        new = [None] * len(self.values)
        for s in range(self.datum.rank + 1):
            k = cls_of[s]
            v = self.values[cls_of[perm[s]]]
            if new[k] is None:
                new[k] = v
            elif new[k] != v:
                raise ValueError("permutation does not respect node classes")
        return Character(self.datum, "generic", tuple(new), self.omega_signs)

    def label(self) -> str:
        if self.mode == "generic":
            parts = []
            for k, cls in enumerate(self.datum.classes):
                d = self.datum.weights[cls[0]]
                if self.values[k] == 1:
                    parts.append("q" if d == 1 else f"q^{d}")
                else:
                    parts.append("-1")
            body = "(" + ", ".join(parts) + ")"
            if self.omega_signs is not None:
                body += " | omega " + str(tuple(self.omega_signs))
            return body
        return "(" + ", ".join(str(v) for v in self.values) + ")"

    def reduce(self) -> "Character":
        """The mod-$p$ character obtained by evaluating at $v = 0$;
        $q_s \\mapsto 0$ and $-1$ stays put.  Independent of $p$."""
        assert self.mode == "generic"
        vals = tuple(0 if self.sign_on_node(s) == 1 else -1
                     for s in range(self.datum.rank + 1))
        return Character(self.datum, "modp", vals)

    def as_module(self, algebra, p: int | None = None) -> "FinModule":
        """The one dimensional module realizing this character.

        Generic characters give a module over the Laurent ring (``p`` must
        stay ``None``); mod-$p$ characters need the prime."""
        alg = _as_algebra(algebra)
        if alg.datum.to_json() != self.datum.to_json():
            raise DatumMismatch("character and algebra built from different data")
        if self.mode == "generic":
            if p is not None:
                raise ValueError("generic characters reduce via reduce_mod_p")
            smats = tuple(((self.node_value(s),),)
                          for s in range(self.datum.rank + 1))
            if self.omega_signs is None:
                omats = None
            else:
                omats = tuple(((Laurent.of_int(sig),),)
                              for sig in self.omega_signs)
            mod = FinModule(alg, smats, omats, ring="laurent",
                            name=f"character {self.label()}")
        else:
            if p is None:
                raise ValueError("mod-p characters need the prime")
            smats = tuple(((self.values[s] % p,),)
                          for s in range(self.datum.rank + 1))
            mod = FinModule(alg, smats, None, ring=("fp", p),
                            name=f"mod-p character {self.label()}")
        mod.check_relations()
        return mod

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return (self.mode == other.mode and self.values == other.values
                and self.omega_signs == other.omega_signs
                and self.datum.to_json() == other.datum.to_json())

    def __hash__(self):
        return hash((self.mode, self.values, self.omega_signs))

    def __repr__(self):
        return f"Character[{self.mode}]{self.label()}"

    def to_json(self) -> dict:
        out = {"mode": self.mode, "label": self.label(),
               "values": list(self.values)}
        if self.omega_signs is not None:
            out["omega_signs"] = list(self.omega_signs)
        return out


def enumerate_characters(datum, char_mode: str = "generic") -> tuple[Character, ...]:
    """All one dimensional characters, each verified through its module.

    ``generic`` runs over sign patterns on node classes ($2^m$ of them,
    trivial first); ``modp`` runs over per-node values in $\\{0, -1\\}$
    ($2^{|S|}$, all of which satisfy the relations since $q \\equiv 0$
    makes the braid products collapse).
    """
    alg = _as_algebra(datum)
    d = alg.datum
    chars = []
    if char_mode == "generic":
        for signs in itertools.product((1, -1), repeat=len(d.classes)):
            ch = Character.generic(d, signs)
            ch.as_module(alg)
            chars.append(ch)
    elif char_mode == "modp":
        for values in itertools.product((0, -1), repeat=d.rank + 1):
            ch = Character.modp(d, values)
            ch.as_module(alg, p=2)
            ch.as_module(alg, p=5)
            chars.append(ch)
    else:
        raise ValueError(f"unknown character mode {char_mode!r}")
    return tuple(chars)


def character_extends(algebra, char: Character):
    """Whether a generic character extends over the length-zero group.

    Returns ``(flag, extensions)`` where ``extensions`` lists one
    extended character per group homomorphism from the weight-preserving
    length-zero group to $\\{\\pm 1\\}$, the all-plus extension first.
    The character extends exactly when its values are constant on the
    node orbits of that group.
    """
    alg = _as_algebra(algebra)
    assert char.mode == "generic"
    omega = alg.omega
    for orbit in omega.node_orbits():
        vals = {char.sign_on_node(s) for s in orbit}
        if len(vals) > 1:
            return False, ()
    n = len(omega.elements)
    exts = []
    for rest in itertools.product((1, -1), repeat=n - 1):
        signs = (1,) + rest
        if all(signs[omega.mult_index(i, j)] == signs[i] * signs[j]
               for i in range(n) for j in range(n)):
            exts.append(char.with_omega_signs(signs))
    return True, tuple(exts)


def induce_character(algebra, char: Character) -> "FinModule":
    """The two dimensional module induced from a non-extending character.

    Requires the stabilizer of the character inside the weight-preserving
    length-zero group to have index two; the two diagonal entries are the
    character and its twist by a fixed coset representative, and every
    length-zero element outside the stabilizer acts by the swap matrix.
    """
    alg = _as_algebra(algebra)
    assert char.mode == "generic"
    extends, _ = character_extends(alg, char)
    if extends:
        raise CharacterExtends(f"{char.label()} extends; induction would "
                               f"not be simple")
    omega = alg.omega
    n = len(omega.elements)
    stab = [i for i in range(n)
            if char.compose_with_node_permutation(omega.perms[i]) == char]
    if 2 * len(stab) != n:
        raise NoIndexTwoStructure(
            f"stabilizer has index {n // len(stab)} in the length-zero group")
    u = min(i for i in range(n) if i not in stab)
    twisted = char.compose_with_node_permutation(omega.perms[u])
    zero, one = Laurent.zero(), Laurent.one()
    smats = tuple(((char.node_value(s), zero), (zero, twisted.node_value(s)))
                  for s in range(alg.datum.rank + 1))
    swap = ((zero, one), (one, zero))
    omats = tuple(_lmat_identity(2) if i in stab else swap for i in range(n))
    mod = FinModule(alg, smats, omats, ring="laurent",
                    name=f"induced from {char.label()}")
    mod.check_relations()
    return mod


class FinModule:
    """A finite dimensional right module given by generator matrices.

    ``smats[s]`` is the matrix of the standard generator at affine node
    ``s``; ``omega_mats[k]`` (when present) the matrix of the ``k``-th
    element of the algebra's weight-preserving length-zero group.  Without
    ``omega_mats`` the module only sees the non-extended algebra.

    ``ring`` is ``"laurent"`` for exact Laurent polynomial entries or
    ``("fp", p)`` for integers mod ``p`` obtained at $v = 0$; reductions
    remember the module they came from in ``generic``.
    """

    __slots__ = ("alg", "smats", "omega_mats", "ring", "generic", "name")

    def __init__(self, alg: HeckeAlgebra, smats, omega_mats, ring="laurent",
                 generic: "FinModule | None" = None, name: str = ""):
        self.alg = alg
        self.smats = tuple(tuple(tuple(row) for row in m) for m in smats)
        if omega_mats is None:
            self.omega_mats = None
        else:
            if len(omega_mats) != len(alg.omega.elements):
                raise ValueError("need one matrix per length-zero element")
            self.omega_mats = tuple(tuple(tuple(row) for row in m)
                                    for m in omega_mats)
        if ring != "laurent":
            tag, p = ring
            assert tag == "fp" and isinstance(p, int) and p >= 2
        self.ring = ring
        self.generic = generic
        self.name = name
        if len(self.smats) != alg.datum.rank + 1:
            raise ValueError("need one matrix per affine node")

    @property
    def dim(self) -> int:
        return len(self.smats[0])

    @property
    def is_modular(self) -> bool:
        return self.ring != "laurent"

    @property
    def prime(self) -> int:
        assert self.ring != "laurent"
        return self.ring[1]

    def _identity(self):
        if self.ring == "laurent":
            return _lmat_identity(self.dim)
        return _imat_identity(self.dim)

    def _mul(self, a, b):
        if self.ring == "laurent":
            return _lmat_mul(a, b)
        return _imat_mul(a, b, self.ring[1])

    def _q_of_node(self, s: int):
        if self.ring == "laurent":
            return self.alg.q(s)
        return 0

    def check_relations(self) -> None:
        """Verify quadratic, braid and length-zero relations; raise
        :class:`RelationsFail` on the first violation."""
        d = self.alg.datum
        n = self.dim
        ident = self._identity()
        for s in range(d.rank + 1):
            m = self.smats[s]
            if len(m) != n or any(len(row) != n for row in m):
                raise RelationsFail(f"matrix at node {s} is not {n} x {n}")
            lhs = self._mul(m, m)
            if self.ring == "laurent":
                q = self.alg.q(s)
                rhs = _lmat_add(_lmat_scale(m, q - Laurent.one()),
                                _lmat_scale(ident, q))
                ok = _lmat_eq(lhs, rhs)
            else:
                p = self.ring[1]
                rhs = tuple(tuple((-m[i][j]) % p for j in range(n))
                            for i in range(n))
                ok = lhs == rhs
            if not ok:
                raise RelationsFail(f"quadratic relation fails at node {s}")
        for s in range(d.rank + 1):
            for t in range(s + 1, d.rank + 1):
                m = d.coxeter_m[s][t]
                if m < 2:
                    continue
                a = self.smats[s]
                b = self.smats[t]
                lhs = rhs = None
                for start, other in ((a, b), (b, a)):
                    prod = self._identity()
                    cur, nxt = start, other
                    for _ in range(m):
                        prod = self._mul(prod, cur)
                        cur, nxt = nxt, cur
                    if lhs is None:
                        lhs = prod
                    else:
                        rhs = prod
                equal = (_lmat_eq(lhs, rhs) if self.ring == "laurent"
                         else lhs == rhs)
                if not equal:
                    raise RelationsFail(
                        f"braid relation of order {m} fails at nodes {s}, {t}")
        if self.omega_mats is not None:
            omega = self.alg.omega
            k = len(omega.elements)
            eq = _lmat_eq if self.ring == "laurent" else tuple.__eq__
            if not eq(self.omega_mats[0], ident):
                raise RelationsFail("identity length-zero element not identity")
            for i in range(k):
                for j in range(k):
                    prod = self._mul(self.omega_mats[i], self.omega_mats[j])
                    if not eq(prod, self.omega_mats[omega.mult_index(i, j)]):
                        raise RelationsFail(
                            f"length-zero multiplication fails at ({i}, {j})")
            for i in range(k):
                perm = omega.perms[i]
                for s in range(d.rank + 1):
                    lhs = self._mul(self.omega_mats[i], self.smats[s])
                    rhs = self._mul(self.smats[perm[s]], self.omega_mats[i])
                    if not eq(lhs, rhs):
                        raise RelationsFail(
                            f"conjugation by length-zero element {i} fails "
                            f"at node {s}")

    def mat_of_omega(self, omega_elt) -> LMatrix:
        if omega_elt.is_identity():
            return self._identity()
        if self.omega_mats is None:
            raise ValueError("module has no action of length-zero elements")
        return self.omega_mats[self.alg.omega.index_of(omega_elt)]

    def act_word(self, word: Sequence[int]):
        """Matrix of $T_{s_{i_1}} \\cdots T_{s_{i_k}}$."""
        out = self._identity()
        for s in word:
            out = self._mul(out, self.smats[s])
        return out

    def act(self, elt: HeckeElt) -> LMatrix:
        """Matrix of a general algebra element (Laurent ring only)."""
        assert self.ring == "laurent"
        n = self.dim
        zero = Laurent.zero()
        acc = tuple(tuple(zero for _ in range(n)) for _ in range(n))
        for w in elt.support():
            omega, word = w.reduced_word()
            mat = self._mul(self.mat_of_omega(omega), self.act_word(word))
            acc = _lmat_add(acc, _lmat_scale(mat, elt.coeff(w)))
        return acc

    def star_twist(self) -> "FinModule":
        """Precompose with the sign involution $T_s \\mapsto -T_s^*$.

        Each generator matrix $M_s$ becomes $-M_s + (q_s - 1)\\,I$;
        length-zero matrices are unchanged.  Applying it twice gives back
        the original matrices.
        """
        assert self.ring == "laurent"
        n = self.dim
        ident = _lmat_identity(n)
        smats = []
        for s in range(self.alg.datum.rank + 1):
            q1 = self.alg.q(s) - Laurent.one()
            smats.append(_lmat_add(_lmat_scale(self.smats[s], Laurent.of_int(-1)),
                                   _lmat_scale(ident, q1)))
        mod = FinModule(self.alg, tuple(smats), self.omega_mats,
                        ring="laurent", name=f"twist of {self.name}")
        mod.check_relations()
        return mod

    def reduce_mod_p(self, p: int) -> "FinModule":
        """Evaluate all entries at $v = 0$ and read them in $F_p$.

        Raises :class:`NegativePowersPresent` if any entry has a pole at
        $v = 0$.  The result keeps a reference to this module."""
        if not (isinstance(p, int) and p >= 2):
            raise ValueError("p must be an integer >= 2")
        if any(p % k == 0 for k in range(2, min(p, 1000)) if k * k <= p):
            raise ValueError(f"{p} is not prime")

        def red(mat):
            out = []
            for row in mat:
                new = []
                for x in row:
                    if x.has_negative_exponents():
                        raise NegativePowersPresent(
                            f"entry {x} of {self.name or 'module'} has "
                            f"negative powers of v")
                    new.append(x.at_v0() % p)
                out.append(tuple(new))
            return tuple(out)

        smats = tuple(red(m) for m in self.smats)
        omats = (None if self.omega_mats is None
                 else tuple(red(m) for m in self.omega_mats))
        mod = FinModule(self.alg, smats, omats, ring=("fp", p), generic=self,
                        name=f"{self.name} mod {p}")
        mod.check_relations()
        return mod

    def diagonal_character_values(self) -> tuple[tuple[int, ...], ...] | None:
        """For an fp module with diagonal generator matrices, the value
        tuples per basis index (one per node); ``None`` if not diagonal."""
        assert self.ring != "laurent"
        n = self.dim
        p = self.ring[1]
        for m in self.smats:
            for i in range(n):
                for j in range(n):
                    if i != j and m[i][j] % p:
                        return None
        return tuple(tuple(self.smats[s][i][i] for s in range(len(self.smats)))
                     for i in range(n))

    def __repr__(self):
        ring = "Z[v, 1/v]" if self.ring == "laurent" else f"F_{self.ring[1]}"
        label = self.name or "module"
        return f"FinModule({label}, dim {self.dim} over {ring})"

    def to_json(self) -> dict:
        def enc(mat):
            if self.ring == "laurent":
                return [[str(x) for x in row] for row in mat]
            return [[int(x) for x in row] for row in mat]

        out = {"dim": self.dim, "name": self.name,
               "ring": ("laurent" if self.ring == "laurent"
                        else f"fp({self.ring[1]})"),
               "generators": [enc(m) for m in self.smats]}
        if self.omega_mats is not None:
            out["length_zero"] = [enc(m) for m in self.omega_mats]
        return out


def reflection_module(datum) -> FinModule:
    """The module on the span of the affine simple roots.

    Only defined for simply laced affine diagrams with equal weights.
    As a left action the generator at ``s`` sends $e_t$ to $-e_t$ when
    $t = s$, to $q\\,e_t$ when the nodes are not adjacent, and to
    $q\\,e_t + v^d\\,e_s$ when they are joined by a single bond; here the
    matrices are transposed to act on row vectors.  Length-zero elements
    permute the basis.
    """
    alg = _as_algebra(datum)
    d = alg.datum
    n = d.rank + 1
    for s in range(n):
        for t in range(s + 1, n):
            if d.coxeter_m[s][t] not in (2, 3):
                raise NotSimplyLaced(
                    f"bond of order {d.coxeter_m[s][t]} between nodes "
                    f"{s} and {t}")
    if len(set(d.weights)) != 1:
        raise NotSimplyLaced("reflection module needs equal weights")
    deg = d.weights[0]
    q = q_power(deg)
    vd = Laurent.v(deg)
    zero = Laurent.zero()
    smats = []
    for s in range(n):
        rows = []
        for t in range(n):
            row = [zero] * n
            if t == s:
                row[t] = Laurent.of_int(-1)
            else:
                row[t] = q
                if d.coxeter_m[s][t] == 3:
                    row[s] = row[s] + vd
            rows.append(tuple(row))
        smats.append(tuple(rows))
    omega = alg.omega
    omats = []
    for perm in omega.perms:
        mat = [[zero] * n for _ in range(n)]
        for t in range(n):
            mat[perm[t]][t] = Laurent.one()
        omats.append(tuple(tuple(row) for row in mat))
    mod = FinModule(alg, tuple(smats), tuple(omats), ring="laurent",
                    name=f"reflection module {d.label()}")
    mod.check_relations()
    return mod


def star_twist(module: FinModule) -> FinModule:
    """Twist a module by the sign involution (see
    :meth:`FinModule.star_twist`)."""
    return module.star_twist()


def reduce_mod_p(module: FinModule, p: int) -> FinModule:
    """Reduce a module with polynomial entries at $v = 0$ into $F_p$."""
    return module.reduce_mod_p(p)


def decompose_at_v0(module: FinModule) -> tuple[Character, ...]:
    """Split a module at $v = 0$ into mod-$p$ characters.

    Requires polynomial entries whose value at $v = 0$ makes every
    generator matrix diagonal with entries in $\\{0, -1\\}$; the result
    lists one character per basis index and does not depend on any prime.
    Length-zero matrices are ignored, the split is one of modules over
    the non-extended algebra.
    """
    assert module.ring == "laurent"
    n = module.dim
    vals = []
    for s, mat in enumerate(module.smats):
        v0 = []
        for row in mat:
            out = []
            for x in row:
                if x.has_negative_exponents():
                    raise NegativePowersPresent(
                        f"entry {x} has negative powers of v")
                out.append(x.at_v0())
            v0.append(out)
        for i in range(n):
            for j in range(n):
                if i != j and v0[i][j] != 0:
                    raise RelationsFail(
                        f"matrix at node {s} is not diagonal at v = 0")
                if i == j and v0[i][i] not in (0, -1):
                    raise RelationsFail(
                        f"diagonal value {v0[i][i]} at v = 0 is outside "
                        f"{{0, -1}}")
        vals.append([v0[i][i] for i in range(n)])
    return tuple(Character.modp(module.alg.datum,
                                tuple(vals[s][i] for s in range(len(vals))))
                 for i in range(n))
