"""
Smith normal form over the integers with unimodular transforms.

``smith_normal_form(A)`` returns U, D, V with U A V = D, both U and V square
unimodular, and the diagonal of D a divisibility chain of nonnegative integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Matrix = list[list[int]]


def identity(k: int) -> Matrix:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(cols)] for i in range(len(A))]


def transpose(A: Matrix, cols: int | None = None) -> Matrix:
    if not A:
        return [[] for _ in range(cols or 0)]
    return [list(r) for r in zip(*A)]


def determinant(A: Matrix) -> int:
    """Bareiss fraction-free elimination; exact for integer matrices."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def is_unimodular(A: Matrix) -> bool:
    return abs(determinant(A)) == 1


@dataclass
class SNFResult:
    D: Matrix
    U: Matrix
    V: Matrix
    diagonal: list[int]
    rank: int

    @property
    def nonzero(self) -> list[int]:
        return self.diagonal[: self.rank]


def smith_normal_form(A: Sequence[Sequence[int]], cols: int | None = None) -> SNFResult:
    m = len(A)
    n = len(A[0]) if m else (cols or 0)
    D = [list(map(int, r)) for r in A]
    U, V = identity(m), identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):  # row dst += c * row src
        for M in (D, U):
            M[dst] = [x + c * y for x, y in zip(M[dst], M[src])]

    def add_col(dst, src, c):
        for M in (D, V):
            for r in M:
                r[dst] += c * r[src]

    def neg_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero |entry| in the trailing block, row-major tie-break
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = abs(D[i][j])
                if x and (best is None or x < best[0]):
                    best = (x, i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = D[i][t] // p
                if q:
                    add_row(i, t, -q)
                if D[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = D[t][j] // p
                if q:
                    add_col(j, t, -q)
                if D[t][j]:
                    dirty = True
            if not dirty:
                # divisibility: fold in any trailing entry not divisible by p
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p), None)
                if bad is None:
                    break
                add_row(t, bad[0], 1)
                continue
            # move the smallest nonzero entry of row/column t to the pivot
            cands = [(abs(D[i][t]), 0, i) for i in range(t, m) if D[i][t]]
            cands += [(abs(D[t][j]), 1, j) for j in range(t, n) if D[t][j]]
            _, kind, k = min(cands)
            if kind == 0:
                swap_rows(t, k)
            else:
                swap_cols(t, k)
        if D[t][t] < 0:
            neg_row(t)
        t += 1
    diag = [D[i][i] for i in range(min(m, n))]
    return SNFResult(D, U, V, diag, sum(1 for d in diag if d))


def parse_matrix(text: str) -> Matrix:
    return [[int(x) for x in line.split()] for line in text.strip().splitlines() if line.strip()]


def cokernel_invariants(rows: Sequence[Sequence[int]], cols: int) -> tuple[int, list[int]]:
    """(free rank, torsion) of Z^cols modulo the row span."""
    if not rows:
        return cols, []
    snf = smith_normal_form(rows)
    nz = snf.nonzero
    return cols - len(nz), [d for d in nz if d > 1]
