"""Exact rational linear algebra.

Dense routines use fraction-free (Bareiss) elimination on integer rows
obtained by clearing denominators.  :class:`EchelonBasis` is an
incremental sparse reducer used for the large consequence spaces.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence


class RationalMatrix:
    """Immutable dense matrix of reduced rationals."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[Sequence], ncols: int | None = None):
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        self.rows = rows
        self.ncols = ncols

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def __repr__(self):
        return f"RationalMatrix({[[str(x) for x in r] for r in self.rows]})"

    def stack(self, other: "RationalMatrix") -> "RationalMatrix":
        if other.ncols != self.ncols:
            raise ValueError("dimension mismatch")
        return RationalMatrix(self.rows + other.rows, self.ncols)

    def with_row(self, v: Sequence) -> "RationalMatrix":
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return RationalMatrix(self.rows + (tuple(v),), self.ncols)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self.rows), len(self.rows)) if self.rows else RationalMatrix([], 0)


def as_matrix(M) -> RationalMatrix:
    return M if isinstance(M, RationalMatrix) else RationalMatrix(M)


def _integer_row(r: Sequence[Fraction]) -> list[int]:
    d = reduce(lcm, (x.denominator for x in r), 1)
    return [int(x * d) for x in r]


def bareiss_echelon(M) -> tuple[list[list[int]], list[int]]:
    """Row echelon form by fraction-free elimination.

    Pivot search is row-major: for each column in turn, the first row at or
    below the current pivot row with a nonzero entry.  Returns the nonzero
    integer echelon rows and their pivot columns.
    """
    M = as_matrix(M)
    a = [_integer_row(r) for r in M.rows]
    m, n = len(a), M.ncols
    r, prev = 0, 1
    pivots = []
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        prow = a[r]
        piv = prow[c]
        for i in range(r + 1, m):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, n):
                ai[j] = (piv * ai[j] - f * prow[j]) // prev
            ai[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(M) -> int:
    return len(bareiss_echelon(M)[1])


def rref(M) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals."""
    rows, pivots = bareiss_echelon(M)
    red = [[Fraction(x, row[p]) for x in row] for row, p in zip(rows, pivots)]
    for k in range(len(red) - 1, -1, -1):
        p = pivots[k]
        for i in range(k):
            f = red[i][p]
            if f:
                ri, rk = red[i], red[k]
                for j in range(p, len(ri)):
                    if rk[j]:
                        ri[j] -= f * rk[j]
    return red, pivots


def kernel_sparse(M) -> list[dict[int, Fraction]]:
    """Kernel basis as sparse vectors, one per free column."""
    M = as_matrix(M)
    red, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for free in range(M.ncols):
        if free in pivset:
            continue
        v = {free: Fraction(1)}
        for row, p in zip(red, pivots):
            if row[free]:
                v[p] = -row[free]
        basis.append(v)
    return basis


def kernel(M) -> list[tuple[Fraction, ...]]:
    """Basis of {v : M v = 0}, one vector per free column."""
    M = as_matrix(M)
    out = []
    for sv in kernel_sparse(M):
        v = [Fraction(0)] * M.ncols
        for j, x in sv.items():
            v[j] = x
        out.append(tuple(v))
    return out


def in_span(v: Sequence, M) -> bool:
    """Is v in the row space of M?"""
    M = as_matrix(M)
    if len(v) != M.ncols:
        raise ValueError(f"dimension mismatch: vector of length {len(v)}, matrix with {M.ncols} columns")
    return rank(M.with_row(v)) == rank(M)


def same_row_space(A, B) -> bool:
    A, B = as_matrix(A), as_matrix(B)
    ra, rb = rank(A), rank(B)
    return ra == rb == rank(A.stack(B))


def mat_vec(M, v: Sequence) -> list[Fraction]:
    M = as_matrix(M)
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in M.rows]


# -- sparse incremental elimination ---------------------------------------

SparseRow = dict  # column index -> nonzero int


def sparse_from(values: Mapping[int, Fraction] | Sequence) -> SparseRow:
    """Primitive integer sparse row proportional to the given rational row."""
    items = values.items() if isinstance(values, Mapping) else enumerate(values)
    items = [(j, Fraction(x)) for j, x in items if x]
    if not items:
        return {}
    d = reduce(lcm, (x.denominator for _, x in items), 1)
    row = {j: int(x * d) for j, x in items}
    return _normalise(row)


def _normalise(row: SparseRow) -> SparseRow:
    g = reduce(gcd, row.values(), 0)
    lead = row[max(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {j: x // g for j, x in row.items()}
    return row


class EchelonBasis:
    """Row space built one sparse vector at a time.

    Each stored row is primitive with a positive entry at its largest
    column (its pivot); no two rows share a pivot.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: SparseRow) -> SparseRow:
        row = dict(row)
        pivots = self.pivots
        heap = [-j for j in row if j in pivots]
        heapq.heapify(heap)
        while heap:
            c = -heapq.heappop(heap)
            a = row.get(c)
            if not a:
                continue
            prow = pivots[c]
            b = prow[c]
            g = gcd(a, b)
            fa, fb = b // g, a // g
            if fa != 1:
                for j in row:
                    row[j] *= fa
            for j, x in prow.items():
                y = row.get(j, 0) - fb * x
                if y:
                    if j not in row and j in pivots and j != c:
                        heapq.heappush(heap, -j)
                    row[j] = y
                else:
                    row.pop(j, None)
        if row:
            row = _normalise(row)
        return row

    def add(self, row: SparseRow) -> bool:
        """Insert a row; True if it enlarged the span."""
        r = self.reduce(row)
        if not r:
            return False
        self.pivots[max(r)] = r
        return True

    def contains(self, row: SparseRow) -> bool:
        return not self.reduce(row)

    def rows(self) -> list[SparseRow]:
        return [self.pivots[p] for p in sorted(self.pivots)]

    def to_matrix(self) -> RationalMatrix:
        out = []
        for r in self.rows():
            v = [0] * self.ncols
            for j, x in r.items():
                v[j] = x
            out.append(v)
        return RationalMatrix(out, self.ncols)
