"""Small exact matrix routines over Fraction (row lists)."""

from __future__ import annotations

from fractions import Fraction


def to_fraction_matrix(rows) -> list[list[Fraction]]:
    out = [[Fraction(x) for x in row] for row in rows]
    if any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _echelon(rows):
    """Row-reduce a copy in place; returns (matrix, pivot columns, sign of row swaps)."""
    A = [list(r) for r in rows]
    pivots = []
    sign = 1
    r = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            A[r], A[p] = A[p], A[r]
            sign = -sign
        for i in range(r + 1, len(A)):
            if A[i][c]:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots, sign


def rank(rows) -> int:
    if not rows:
        return 0
    return len(_echelon(to_fraction_matrix(rows))[1])


def det(rows) -> Fraction:
    A = to_fraction_matrix(rows)
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    E, pivots, sign = _echelon(A)
    if len(pivots) < n:
        return Fraction(0)
    out = Fraction(sign)
    for i in range(n):
        out *= E[i][i]
    return out


def inverse(rows) -> list[list[Fraction]]:
    A = to_fraction_matrix(rows)
    n = len(A)
    aug = [A[i] + identity(n)[i] for i in range(n)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def matmul(A, B):
    return [[sum((A[i][t] * B[t][j] for t in range(len(B))), Fraction(0)) for j in range(len(B[0]))] for i in range(len(A))]


def transpose(A):
    return [list(r) for r in zip(*A)]


def add(A, B, sign: int = 1):
    return [[a + sign * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(A, c):
    return [[c * a for a in row] for row in A]
