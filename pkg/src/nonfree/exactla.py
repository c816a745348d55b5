"""Exact rational linear algebra: PSD certification and span tracking.

The PSD check is a fraction-free symmetric elimination (Bareiss) with
largest-diagonal pivoting on the integer matrix obtained by clearing
denominators. Pivots are returned as the exact Schur-complement ratios of
the original matrix, so they form a checkable certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm


@dataclass(frozen=True)
class PsdReport:
    psd: bool
    symmetric: bool
    pivots: tuple
    rank: int | None
    failure: str | None = None


def psd_report(rows):
    """Decide positive semidefiniteness of an exact rational matrix.

    Rows may contain ints or Fractions. An asymmetric matrix is reported
    not PSD without elimination. For a PSD matrix ``rank`` equals the number
    of (positive) pivots; elimination stops once the largest remaining
    diagonal entry hits zero, at which point the whole remaining block must
    vanish.
    """
    n = len(rows)
    A = [[Fraction(v) for v in row] for row in rows]
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    for i in range(n):
        for j in range(i + 1, n):
            if A[i][j] != A[j][i]:
                return PsdReport(
                    psd=False,
                    symmetric=False,
                    pivots=(),
                    rank=None,
                    failure=f"asymmetric at ({i},{j})",
                )
    if n == 0:
        return PsdReport(psd=True, symmetric=True, pivots=(), rank=0)

    s = lcm(*(v.denominator for row in A for v in row))
    M = [[int(v * s) for v in row] for row in A]

    pivots = []
    prev = 1
    for k in range(n):
        m = max(range(k, n), key=lambda i: M[i][i])
        if M[m][m] <= 0:
            if M[m][m] < 0:
                return PsdReport(
                    psd=False,
                    symmetric=True,
                    pivots=tuple(pivots),
                    rank=None,
                    failure=f"negative diagonal {Fraction(M[m][m], s * prev)}",
                )
            for i in range(k, n):
                for j in range(k, n):
                    if M[i][j] != 0:
                        return PsdReport(
                            psd=False,
                            symmetric=True,
                            pivots=tuple(pivots),
                            rank=None,
                            failure="zero diagonal with nonzero residual",
                        )
            return PsdReport(
                psd=True, symmetric=True, pivots=tuple(pivots), rank=len(pivots)
            )
        if m != k:
            M[k], M[m] = M[m], M[k]
            for row in M:
                row[k], row[m] = row[m], row[k]
        p = M[k][k]
        pivots.append(Fraction(p, s * prev))
        for i in range(k + 1, n):
            Mik = M[i][k]
            Mi, Mk = M[i], M[k]
            for j in range(k + 1, n):
                Mi[j] = (p * Mi[j] - Mik * Mk[j]) // prev
        prev = p
    return PsdReport(psd=True, symmetric=True, pivots=tuple(pivots), rank=len(pivots))


def principal_minors_psd(rows):
    """Independent PSD test: every principal minor must be >= 0.

    Exponential in the size, so only usable on small matrices; exists as a
    cross-check for the elimination route.
    """
    n = len(rows)
    A = [[Fraction(v) for v in row] for row in rows]
    for i in range(n):
        for j in range(n):
            if A[i][j] != A[j][i]:
                return False
    for mask in range(1, 1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        sub = [[A[i][j] for j in idx] for i in idx]
        if _det(sub) < 0:
            return False
    return True


def _det(rows):
    n = len(rows)
    M = [row[:] for row in rows]
    det = Fraction(1)
    for k in range(n):
        piv = None
        for i in range(k, n):
            if M[i][k] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            det = -det
        det *= M[k][k]
        inv = 1 / M[k][k]
        for i in range(k + 1, n):
            f = M[i][k] * inv
            if f:
                for j in range(k, n):
                    M[i][j] -= f * M[k][j]
    return det


class SpanTracker:
    """Incremental rank of a set of exact rational vectors.

    ``add`` reduces the vector against the rows held so far and keeps the
    residual when it is nonzero; returns whether the rank grew.
    """

    def __init__(self, dimension):
        self.dimension = dimension
        self._rows = []  # (pivot index, vector with 1 at pivot)

    @property
    def rank(self):
        return len(self._rows)

    def add(self, vector):
        v = [Fraction(x) for x in vector]
        if len(v) != self.dimension:
            raise ValueError("vector has wrong length")
        for piv, row in self._rows:
            c = v[piv]
            if c:
                for j in range(self.dimension):
                    v[j] -= c * row[j]
        for piv in range(self.dimension):
            if v[piv]:
                inv = 1 / v[piv]
                v = [x * inv for x in v]
                self._rows.append((piv, v))
                self._rows.sort(key=lambda r: r[0])
                return True
        return False

    def contains(self, vector):
        v = [Fraction(x) for x in vector]
        for piv, row in self._rows:
            c = v[piv]
            if c:
                for j in range(self.dimension):
                    v[j] -= c * row[j]
        return all(x == 0 for x in v)
