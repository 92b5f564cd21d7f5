"""Small exact linear algebra over rationals.

Matrices are tuples of row tuples; entries are ints or Q rationals and are
never coerced to floats. Sizes here stay modest (<= 248), so plain
Gaussian elimination with exact division is the right tool.
"""

from __future__ import annotations

from typing import Sequence

from .exactnum import Q

Matrix = tuple[tuple, ...]
Vector = tuple


def freeze(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple((0,) * m for _ in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    bt = tuple(zip(*b))
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            bj = bt[j]
            acc = 0
            for t in range(k):
                x = ai[t]
                if x:  # skipping zero terms keeps monomial-matrix powers cheap
                    y = bj[t]
                    if y:
                        acc += x * y
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def mat_eq(a: Matrix, b: Matrix) -> bool:
    if len(a) != len(b):
        return False
    return all(all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def is_identity(a: Matrix) -> bool:
    return all(x == (1 if i == j else 0) for i, row in enumerate(a) for j, x in enumerate(row))


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def mat_pow(a: Matrix, k: int) -> Matrix:
    if k < 0:
        return mat_pow(inverse(a), -k)
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base) if k > 1 else base
        k >>= 1
    return result


def det(a: Matrix):
    """Exact determinant by fraction Gaussian elimination."""
    n = len(a)
    m = [[Q(x) for x in row] for row in a]
    sign = 1
    acc = Q(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Q(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        pv = m[col][col]
        acc *= pv
        for r in range(col + 1, n):
            factor = m[r][col] / pv
            if factor:
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return sign * acc


def inverse(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan; raises ValueError on singular input."""
    n = len(a)
    m = [[Q(x) for x in row] + [Q(1) if i == j else Q(0) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def max_entry_bits(a: Matrix) -> int:
    """Largest numerator/denominator bit length; used as a growth guard."""
    best = 0
    for row in a:
        for x in row:
            q = Q(x)
            best = max(best, int(q.numerator).bit_length(), int(q.denominator).bit_length())
    return best
