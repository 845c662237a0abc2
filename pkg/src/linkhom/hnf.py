"""Exact integer linear algebra via column Hermite normal form.

Matrices are lists of rows of Python ints.  ``column_hnf`` finds a unimodular
``U`` with ``A U = H`` where ``H`` is in column echelon form; ``solve`` uses it
to decide ``A x = b`` over the integers.
"""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    cols = len(B[0]) if B else 0
    return [[sum(a * B[k][j] for k, a in enumerate(row) if a) for j in range(cols)] for row in A]


def matvec(A: Matrix, x: Sequence[int]) -> list[int]:
    return [sum(a * xi for a, xi in zip(row, x) if a) for row in A]


def _col_combine(M: Matrix, i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    """Replace columns (i, j) by (a*ci + b*cj, c*ci + d*cj)."""
    for row in M:
        x, y = row[i], row[j]
        row[i] = a * x + b * y
        row[j] = c * x + d * y


def _negate_col(M: Matrix, i: int) -> None:
    for row in M:
        row[i] = -row[i]


def _swap_cols(M: Matrix, i: int, j: int) -> None:
    for row in M:
        row[i], row[j] = row[j], row[i]


def column_hnf(A: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, list[int]]:
    """Return ``(H, U, pivot_rows)`` with ``A U = H``.

    Column ``p`` of ``H`` has its first nonzero entry, which is positive, in
    row ``pivot_rows[p]``; columns past ``len(pivot_rows)`` are zero.  Entries
    left of a pivot are reduced into ``[0, pivot)``.
    """
    H = [list(map(int, row)) for row in A]
    m = len(H[0]) if H else 0
    U = identity(m)
    pivots: list[int] = []
    p = 0
    for r in range(len(H)):
        if p == m:
            break
        row = H[r]
        while True:
            nz = [j for j in range(p, m) if row[j]]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(row[j]))
            if j0 != p:
                _swap_cols(H, p, j0)
                _swap_cols(U, p, j0)
            done = True
            for j in range(p + 1, m):
                if row[j]:
                    q = row[j] // row[p]
                    _col_combine(H, p, j, 1, 0, -q, 1)
                    _col_combine(U, p, j, 1, 0, -q, 1)
                    if row[j]:
                        done = False
            if done:
                break
        if not row[p]:
            continue
        if row[p] < 0:
            _negate_col(H, p)
            _negate_col(U, p)
        piv = row[p]
        for j in range(p):
            q = row[j] // piv
            if q:
                _col_combine(H, j, p, 1, -q, 0, 1)
                _col_combine(U, j, p, 1, -q, 0, 1)
        pivots.append(r)
        p += 1
    return H, U, pivots


def solve(A: Sequence[Sequence[int]], b: Sequence[int]) -> list[int] | None:
    """An integer solution of ``A x = b``, or None if there is none."""
    H, U, pivots = column_hnf(A)
    m = len(U)
    res = [int(v) for v in b]
    y = [0] * m
    for p, r in enumerate(pivots):
        piv = H[r][p]
        if res[r] % piv:
            return None
        q = res[r] // piv
        y[p] = q
        if q:
            for i in range(len(res)):
                if H[i][p]:
                    res[i] -= q * H[i][p]
    if any(res):
        return None
    return matvec(U, y)
