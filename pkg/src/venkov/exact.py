"""Exact rational linear algebra.

Matrices are plain row-major sequences of sequences whose entries are ``int``
or ``fractions.Fraction``; vectors are plain sequences.  Nothing here ever
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotPositiveDefinite, NotSymmetric

RationalMatrix = Sequence[Sequence[Fraction]]
RationalVector = Sequence[Fraction]


def _content(row: dict[int, int]) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def integer_row(row: Iterable) -> dict[int, int]:
    """Sparse primitive integer multiple of a rational row (same span)."""
    entries = [(j, Fraction(x)) for j, x in enumerate(row) if x]
    if not entries:
        return {}
    den = lcm(*(x.denominator for _, x in entries))
    out = {j: int(x * den) for j, x in entries}
    g = _content(out)
    if g != 1:
        out = {j: v // g for j, v in out.items()}
    return out


class EchelonBasis:
    """Row echelon basis of a growing set of rational rows.

    Rows are kept as sparse primitive integer vectors.  Reduction is
    fraction-free: eliminating column ``j`` from ``row`` with pivot row ``p``
    computes ``p[j] * row - row[j] * p`` and divides by the content, so
    integral input never leaves the integers.
    """

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    def __len__(self):
        return len(self.pivots)

    def _reduce(self, row: dict[int, int]) -> dict[int, int]:
        pivots = self.pivots
        while row:
            j = min(row)
            p = pivots.get(j)
            if p is None:
                return row
            a, b = p[j], row[j]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * v for k, v in row.items()}
            for k, v in p.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            c = _content(new) if new else 1
            if c != 1:
                new = {k: v // c for k, v in new.items()}
            row = new
        return row

    def add(self, row: Iterable) -> bool:
        """Insert ``row``; return True iff it increased the rank."""
        r = self._reduce(integer_row(row))
        if not r:
            return False
        j = min(r)
        if r[j] < 0:
            r = {k: -v for k, v in r.items()}
        self.pivots[j] = r
        return True

    def __contains__(self, row) -> bool:
        return not self._reduce(integer_row(row))


def rank(M: RationalMatrix) -> int:
    """Exact rank over the rationals."""
    basis = EchelonBasis()
    for row in M:
        basis.add(row)
    return len(basis)


def det(M: RationalMatrix) -> Fraction:
    """Determinant by Bareiss elimination (integral input stays integral)."""
    n = len(M)
    if any(len(r) != n for r in M):
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    dens = [lcm(*(Fraction(x).denominator for x in r)) for r in M]
    A = [[int(Fraction(x) * dn) for x in r] for r, dn in zip(M, dens)]
    scale = 1
    for dn in dens:
        scale *= dn
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            Ai, Ak = A[i], A[k]
            for j in range(k + 1, n):
                Ai[j] = (akk * Ai[j] - aik * Ak[j]) // prev
        prev = akk
    return Fraction(sign * A[n - 1][n - 1], scale)


def affine_dimension(points: Sequence[RationalVector]) -> int:
    """Dimension of the affine hull of a nonempty point list."""
    if not points:
        raise ValueError("affine_dimension of an empty point set")
    p0 = points[0]
    n = len(p0)
    if any(len(p) != n for p in points):
        raise DimensionMismatch("points of different dimensions")
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def ldl_decompose(Q: RationalMatrix):
    """Factor a symmetric positive definite ``Q`` as ``L D L^T``.

    Returns ``(L, D)`` with ``L`` unit lower triangular (list of lists of
    Fractions) and ``D`` the list of diagonal pivots, all strictly positive.
    """
    n = len(Q)
    if any(len(r) != n for r in Q):
        raise DimensionMismatch("Gram matrix is not square")
    Q = [[Fraction(x) for x in r] for r in Q]
    for i in range(n):
        for j in range(i):
            if Q[i][j] != Q[j][i]:
                raise NotSymmetric(f"entry ({i},{j}) differs from ({j},{i})")
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    D = [Fraction(0)] * n
    for j in range(n):
        D[j] = Q[j][j] - sum(L[j][k] ** 2 * D[k] for k in range(j))
        if D[j] <= 0:
            raise NotPositiveDefinite(f"pivot {j} is {D[j]}")
        for i in range(j + 1, n):
            s = Q[i][j] - sum(L[i][k] * L[j][k] * D[k] for k in range(j))
            L[i][j] = s / D[j]
    return L, D


def solve_linear(A: RationalMatrix, b: RationalVector):
    """One exact solution of ``A x = b``, or None when inconsistent.

    Non-pivot variables are set to zero.
    """
    if len(A) != len(b):
        raise DimensionMismatch("A.rows != b.dim")
    if not A:
        return []
    ncols = len(A[0])
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    pivcols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivcols.append(c)
        r += 1
        if r == len(M):
            break
    if any(row[-1] for row in M[r:]):
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivcols):
        x[c] = M[i][-1]
    return x


def mat_vec(M: RationalMatrix, v: RationalVector) -> list:
    return [sum(a * b for a, b in zip(row, v)) for row in M]


def transpose(M: RationalMatrix) -> list:
    return [list(col) for col in zip(*M)]
