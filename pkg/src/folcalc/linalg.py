"""Exact linear algebra: fraction-free Gaussian elimination.

Systems are scaled row by row to integers, then eliminated Bareiss-style, so
the only divisions are exact integer divisions. Pivots always take the first
row with a nonzero entry in the pivot column, which makes elimination order
(and therefore every result) deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _integer_rows(matrix, rhs):
    """Scale each augmented row [A_i | b_i] to integers.

    Row scaling by positive constants preserves the solution set.
    """
    rows = []
    for arow, b in zip(matrix, rhs):
        entries = [Fraction(x) for x in arow] + [Fraction(b)]
        den = 1
        for x in entries:
            den = den * x.denominator // gcd(den, x.denominator)
        rows.append([int(x * den) for x in entries])
    return rows


def solve_exact(matrix, rhs) -> list[Fraction] | None:
    """Solve the square system ``matrix @ x = rhs`` exactly.

    Returns None when the matrix is singular. Entries may be ints or
    Fractions; the result is a list of Fractions.
    """
    n = len(matrix)
    if n == 0:
        return []
    aug = _integer_rows(matrix, rhs)
    width = n + 1
    prev = 1
    for k in range(n):
        piv = None
        for i in range(k, n):
            if aug[i][k]:
                piv = i
                break
        if piv is None:
            return None
        if piv != k:
            aug[k], aug[piv] = aug[piv], aug[k]
        rowk = aug[k]
        pk = rowk[k]
        for i in range(k + 1, n):
            rowi = aug[i]
            f = rowi[k]
            if f:
                for j in range(k + 1, width):
                    rowi[j] = (pk * rowi[j] - f * rowk[j]) // prev
            else:
                # Bareiss still rescales untouched rows; the division stays exact.
                for j in range(k + 1, width):
                    if rowi[j]:
                        rowi[j] = (pk * rowi[j]) // prev
            rowi[k] = 0
        prev = pk
    xs: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(aug[i][n])
        for j in range(i + 1, n):
            if aug[i][j]:
                acc -= aug[i][j] * xs[j]
        xs[i] = acc / aug[i][i]
    return xs


def is_negative_definite_matrix(matrix) -> bool:
    """Sign test via leading principal minors: (-1)^k d_k > 0 for k = 1..n.

    Eliminates without row swaps so the running pivots are exactly the leading
    principal minors (up to the positive global scaling used to clear
    denominators). A vanishing pivot means a vanishing leading minor, which
    already rules out definiteness.
    """
    n = len(matrix)
    if n == 0:
        return True
    den = 1
    for row in matrix:
        for x in row:
            d = Fraction(x).denominator
            den = den * d // gcd(den, d)
    m = [[int(Fraction(x) * den) for x in row] for row in matrix]
    prev = 1
    for k in range(n):
        pk = m[k][k]
        if pk == 0:
            return False
        # d_{k+1} must have sign (-1)^{k+1}
        if (pk < 0) != (k % 2 == 0):
            return False
        for i in range(k + 1, n):
            f = m[i][k]
            if f:
                for j in range(k + 1, n):
                    m[i][j] = (pk * m[i][j] - f * m[k][j]) // prev
            else:
                for j in range(k + 1, n):
                    if m[i][j]:
                        m[i][j] = (pk * m[i][j]) // prev
            m[i][k] = 0
        prev = pk
    return True
