"""Small exact integer linear algebra: products, determinants, exterior powers."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def det(a: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination (Bareiss); exact for integer input."""
    m = [list(row) for row in a]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for s in range(k + 1, n):
                if m[s][k]:
                    m[k], m[s] = m[s], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def exterior_power_columns(a: Matrix) -> list[dict[int, int]]:
    """Columns of the full exterior algebra map Lambda(a) on bit-set basis.

    Entry (R, C) of Lambda(a) is the minor of ``a`` with row set R and column
    set C (both as bit masks, |R| = |C|).  Minors are built by Laplace
    expansion along the lowest column, memoised over (R, C), so this never
    touches the Grassmann multiplication code.
    """
    n = len(a)
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def minor(rows: int, cols: int) -> int:
        if cols == 0:
            return 1
        c = (cols & -cols).bit_length() - 1
        rest = cols & (cols - 1)
        total = 0
        sign = 1
        rr = rows
        while rr:
            low = rr & -rr
            i = low.bit_length() - 1
            if a[i][c]:
                total += sign * a[i][c] * minor(rows ^ low, rest)
            sign = -sign
            rr ^= low
        return total

    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for s in range(full + 1):
        by_size[s.bit_count()].append(s)
    columns = []
    for cols in range(full + 1):
        col = {}
        for rows in by_size[cols.bit_count()]:
            v = minor(rows, cols)
            if v:
                col[rows] = v
        columns.append(col)
    return columns
