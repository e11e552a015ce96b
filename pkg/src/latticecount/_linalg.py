"""Small exact linear-algebra helpers over the rationals.

Everything works on sequences of ints or Fractions and never touches
floating point.  Matrices are tiny here (dimension of the ambient space,
so usually 1..4), hence plain Gaussian elimination with exact pivots.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant of an integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    for row in rows:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    m = [list(row) for row in rows]
    sign = 1
    prev = 1
    for col in range(n - 1):
        if m[col][col] == 0:
            pivot = next((r for r in range(col + 1, n) if m[r][col] != 0), None)
            if pivot is None:
                return 0
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return sign * m[n - 1][n - 1]


def solve_cramer_int(
    rows: Sequence[Sequence[int]], rhs: Sequence[int]
) -> tuple[Fraction, ...]:
    """Solve a nonsingular integer square system exactly by Cramer's rule."""
    d = det_int(rows)
    if d == 0:
        raise ValueError("singular linear system")
    n = len(rows)
    out = []
    for j in range(n):
        column_swapped = [
            [rhs[i] if c == j else rows[i][c] for c in range(n)] for i in range(n)
        ]
        out.append(Fraction(det_int(column_swapped), d))
    return tuple(out)


def solve_rational(
    rows: Sequence[Sequence[int | Fraction]],
    rhs: Sequence[int | Fraction],
) -> tuple[Fraction, ...]:
    """Solve the nonsingular square system rows * x = rhs exactly."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular linear system")
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col] * inv
                for c in range(col, n + 1):
                    m[r][c] -= factor * m[col][c]
    return tuple(m[i][n] / m[i][i] for i in range(n))


def mat_mul_int(
    a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]
) -> tuple[tuple[int, ...], ...]:
    """Product of two integer matrices as a tuple of row tuples."""
    if a and b and len(a[0]) != len(b):
        raise ValueError("incompatible shapes")
    cols = range(len(b[0])) if b else range(0)
    return tuple(
        tuple(sum(row[k] * b[k][j] for k in range(len(b))) for j in cols) for row in a
    )
