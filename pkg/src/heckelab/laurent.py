r"""Exact Laurent polynomials in one variable over the integers.

The ring $\mathbb{Z}[v, v^{-1}]$ is the scalar ring for everything in this
package: Hecke algebra structure constants live here, and the parameter of
a node with weight $d$ is $q_s = v^{2d}$.  Coefficients are Python ints so
nothing ever overflows or loses precision.

Internally a :class:`Laurent` is a dict mapping exponent to a *nonzero*
integer coefficient.  The zero polynomial is the empty dict.

>>> x = Laurent.v() + Laurent.of_int(3)
>>> print(x * x)
9 + 6*v + v^2
>>> print(x.shift(-1))
3*v^-1 + 1
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

from .errors import NegativePowersPresent

__all__ = ["Laurent", "q_power"]


class Laurent:
    """An element of Z[v, v^-1], stored sparsely by exponent."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.c: dict[int, int] = {}
        if coeffs:
            for e, a in coeffs.items():
                if a:
                    self.c[int(e)] = int(a)

    # ---- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    @staticmethod
    def v(exp: int = 1) -> "Laurent":
        """The monomial v^exp."""
        return Laurent({exp: 1})

    @staticmethod
    def of_int(n: int) -> "Laurent":
        return Laurent({0: n})

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "Laurent":
        return Laurent({exp: coeff})

    # ---- queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def coeff(self, exp: int) -> int:
        return self.c.get(exp, 0)

    def constant_term(self) -> int:
        return self.c.get(0, 0)

    def min_exp(self) -> int:
        """Smallest exponent with nonzero coefficient (0 for the zero poly)."""
        return min(self.c) if self.c else 0

    def max_exp(self) -> int:
        return max(self.c) if self.c else 0

    def only_even_exponents(self) -> bool:
        return all(e % 2 == 0 for e in self.c)

    def has_negative_exponents(self) -> bool:
        return any(e < 0 for e in self.c)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.c.items()))

    # ---- ring operations ----------------------------------------------

    def __add__(self, other: "Laurent") -> "Laurent":
        out = dict(self.c)
        for e, a in other.c.items():
            s = out.get(e, 0) + a
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = Laurent()
        r.c = out
        return r

    def __neg__(self) -> "Laurent":
        r = Laurent()
        r.c = {e: -a for e, a in self.c.items()}
        return r

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent | int") -> "Laurent":
        if isinstance(other, int):
            if other == 0:
                return Laurent()
            r = Laurent()
            r.c = {e: a * other for e, a in self.c.items()}
            return r
        out: dict[int, int] = {}
        for e1, a1 in self.c.items():
            for e2, a2 in other.c.items():
                e = e1 + e2
                s = out.get(e, 0) + a1 * a2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        r = Laurent()
        r.c = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            if len(self.c) == 1:
                ((e, a),) = self.c.items()
                if a in (1, -1):
                    return Laurent({e * n: a if n % 2 else 1})
            raise ValueError("negative power of a non-unit Laurent polynomial")
        out = Laurent.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "Laurent":
        """Multiply by v^k (shift every exponent by k)."""
        r = Laurent()
        r.c = {e + k: a for e, a in self.c.items()}
        return r

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        if isinstance(other, Laurent):
            return self.c == other.c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.c.items()))

    def __bool__(self) -> bool:
        return bool(self.c)

    # ---- specialization ------------------------------------------------

    def at_v0(self) -> int:
        """Evaluate at v = 0.  Demands that no negative exponent is present."""
        if self.has_negative_exponents():
            raise NegativePowersPresent(f"cannot set v=0 in {self}")
        return self.constant_term()

    def evaluate(self, x):
        """Evaluate at an exact value x (Fraction or int; floats work too)."""
        if x == 0:
            return self.at_v0()
        total = x - x  # zero of the right type
        for e, a in self.c.items():
            total += a * x**e
        return total

    def mod_coeffs(self, p: int) -> "Laurent":
        """Reduce every coefficient modulo p into the range [0, p)."""
        return Laurent({e: a % p for e, a in self.c.items()})

    # ---- presentation ---------------------------------------------------

    def __str__(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for e, a in sorted(self.c.items()):
            if e == 0:
                term = str(abs(a))
            else:
                mono = "v" if e == 1 else f"v^{e}"
                term = mono if abs(a) == 1 else f"{abs(a)}*{mono}"
            if not parts:
                parts.append(term if a > 0 else "-" + term)
            else:
                parts.append(("+ " if a > 0 else "- ") + term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Laurent({self.c!r})"

    def to_json(self) -> dict[str, int]:
        """Exponent-to-coefficient map with string keys, sorted for stability."""
        return {str(e): a for e, a in sorted(self.c.items())}

    @staticmethod
    def from_json(data: Mapping[str, int]) -> "Laurent":
        return Laurent({int(e): int(a) for e, a in data.items()})


def q_power(d: int) -> Laurent:
    """The parameter v^(2d) attached to a node of weight d."""
    return Laurent({2 * d: 1})
