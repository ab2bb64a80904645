"""Exact linear algebra over the integers and rationals at tiny sizes.

Everything here operates on lists of ints or Fractions and never touches
floating point.  Matrices are lists of rows.  Sizes are bounded by the
rank of the root system (at most 8), so cubic algorithms are plenty.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

IntMatrix = Sequence[Sequence[int]]


def mat_vec(m: IntMatrix, v: Sequence[int]) -> tuple[int, ...]:
    """Matrix times column vector."""
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def mat_mul(a: IntMatrix, b: IntMatrix) -> tuple[tuple[int, ...], ...]:
    n, k, m = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m))
        for i in range(n)
    )


def identity(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: IntMatrix) -> tuple[tuple[int, ...], ...]:
    return tuple(zip(*m))


def frac_inverse(m: IntMatrix) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(m)
    a = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(m)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        scale = a[col][col]
        a[col] = [x / scale for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def int_inverse(m: IntMatrix) -> tuple[tuple[int, ...], ...]:
    """Inverse of an integer matrix with determinant +-1, as exact ints."""
    inv = frac_inverse(m)
    out = []
    for row in inv:
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix inverse is not integral")
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def det(m: IntMatrix) -> int:
    """Exact determinant via fraction-free-enough rational elimination."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    sign = 1
    prod = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        prod *= a[col][col]
        inv_p = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv_p
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    value = sign * prod
    assert value.denominator == 1
    return int(value)


def echelon_basis(rows: IntMatrix, width: int) -> tuple[tuple[int, ...], ...]:
    """Echelon-form basis of the integer row lattice spanned by ``rows``.

    The result rows have strictly increasing pivot columns, each pivot is
    positive and is the first nonzero entry of its row.  This is enough
    structure for exact membership tests and canonical coset reduction.
    """
    work = [list(map(int, r)) for r in rows if any(r)]
    result: list[list[int]] = []
    for col in range(width):
        while True:
            nz = [r for r in work if r[col]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                f = r[col] // piv[col]
                for j in range(width):
                    r[j] -= f * piv[j]
        nz = [r for r in work if r[col]]
        if nz:
            piv = nz[0]
            work.remove(piv)
            if piv[col] < 0:
                piv = [-x for x in piv]
            result.append(piv)
        work = [r for r in work if any(r)]
    return tuple(tuple(r) for r in result)


def in_row_lattice(echelon: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Membership of an integer vector in the lattice with echelon basis."""
    rem = list(v)
    for row in echelon:
        col = next(j for j, x in enumerate(row) if x)
        if rem[col] % row[col]:
            return False
        f = rem[col] // row[col]
        for j in range(len(rem)):
            rem[j] -= f * row[j]
    return not any(rem)


def reduce_mod_lattice(
    echelon: Sequence[Sequence[int]], v: Sequence[int]
) -> tuple[int, ...]:
    """Canonical representative of ``v`` modulo a full-rank row lattice.

    Requires the echelon basis to be square (pivot in every column); two
    vectors reduce to the same tuple exactly when they lie in the same
    coset.
    """
    rem = list(v)
    for row in echelon:
        col = next(j for j, x in enumerate(row) if x)
        f = rem[col] // row[col]
        for j in range(len(rem)):
            rem[j] -= f * row[j]
    return tuple(rem)
