"""Exact integer and rational linear algebra.

Everything here works on Python ``int`` and :class:`fractions.Fraction`, so
results are exact regardless of size.  Matrices are small (tens of rows and
columns), which keeps the straightforward algorithms fast enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

RatVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major.

    ``ncols`` is stored explicitly so that matrices with zero rows (or an
    n x 0 kernel basis) keep their shape.
    """

    entries: tuple[tuple[int, ...], ...]
    ncols: int

    def __post_init__(self):
        for row in self.entries:
            if len(row) != self.ncols:
                raise ValueError("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> IntMatrix:
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        return cls(rows, ncols)

    @classmethod
    def from_columns(cls, cols: Iterable[Sequence[int]], nrows: int) -> IntMatrix:
        cols = [tuple(int(v) for v in c) for c in cols]
        rows = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls(rows, len(cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def rows(self) -> list[tuple[int, ...]]:
        return list(self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(tuple(self.columns()), self.nrows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries),
            other.ncols,
        )

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.entries for v in r)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def as_intmatrix(M) -> IntMatrix:
    if isinstance(M, IntMatrix):
        return M
    return IntMatrix.from_rows(M)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide by the gcd of the entries and make the first nonzero entry positive."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    out = [x // g for x in v]
    lead = next(x for x in out if x != 0)
    if lead < 0:
        out = [-x for x in out]
    return tuple(out)


def clear_denominators(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector by the lcm of its denominators."""
    lcm = 1
    for x in v:
        d = Fraction(x).denominator
        lcm = lcm * d // gcd(lcm, d)
    return tuple(int(Fraction(x) * lcm) for x in v)


def det(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n, m = M.shape
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in M.entries]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hermite_normal_form(M) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U @ M == H``, ``U`` unimodular and ``H`` in
    echelon form with positive pivots; entries above each pivot lie in
    ``[0, pivot)``.  At each step the row with the smallest nonzero absolute
    value in the pivot column is used as the pivot candidate.
    """
    M = as_intmatrix(M)
    m, n = M.shape
    if m == 0:
        raise ValueError("hermite_normal_form of an empty matrix")
    h = [list(r) for r in M.entries]
    u = [[int(i == j) for j in range(m)] for i in range(m)]

    def axpy(dst, src, q):
        # row_dst -= q * row_src, in both h and u
        hd, hs = h[dst], h[src]
        for j in range(n):
            hd[j] -= q * hs[j]
        ud, us = u[dst], u[src]
        for j in range(m):
            ud[j] -= q * us[j]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if h[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(h[i][c]))
            if p != r:
                h[r], h[p] = h[p], h[r]
                u[r], u[p] = u[p], u[r]
            done = True
            for i in range(r + 1, m):
                if h[i][c] != 0:
                    axpy(i, r, h[i][c] // h[r][c])
                    if h[i][c] != 0:
                        done = False
            if done:
                break
        if all(h[i][c] == 0 for i in range(r, m)):
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            axpy(i, r, h[i][c] // h[r][c])
        r += 1
    return IntMatrix.from_rows(h, n), IntMatrix.from_rows(u, m)


def is_hermite_normal_form(H: IntMatrix) -> bool:
    last = -1
    zero_seen = False
    for i, row in enumerate(H.entries):
        nz = [j for j, v in enumerate(row) if v != 0]
        if not nz:
            zero_seen = True
            continue
        if zero_seen:
            return False
        c = nz[0]
        if c <= last or row[c] <= 0:
            return False
        if any(not (0 <= H[k, c] < row[c]) for k in range(i)):
            return False
        last = c
    return True


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q.  Returns the nonzero rows and pivot columns."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return [], []
    m, n = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return a[:r], pivots


def rank(M) -> int:
    rows = M.rows() if isinstance(M, IntMatrix) else list(M)
    return len(rref(rows)[1])


def rational_nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {y in Q^ncols : rows @ y = 0}, one vector per free column."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        y = [Fraction(0)] * ncols
        y[f] = Fraction(1)
        for row, p in zip(red, pivots):
            y[p] = -row[f]
        basis.append(y)
    return basis


def integer_kernel(M) -> IntMatrix:
    """Saturated integer kernel of ``M``, returned as columns.

    The kernel comes from the unimodular transform of the HNF of ``M^T``: the
    rows of ``U`` matching zero rows of ``H`` span {y : M y = 0} over Z, and
    because ``U`` is unimodular that lattice is saturated.  The basis is then
    put in Hermite normal form to keep entries small and the output canonical.
    """
    M = as_intmatrix(M)
    m, n = M.shape
    if m == 0:
        return IntMatrix.identity(n)
    H, U = hermite_normal_form(M.T)
    kern = [U.row(i) for i in range(n) if not any(H.row(i))]
    if not kern:
        return IntMatrix(tuple(() for _ in range(n)), 0)
    Hk, _ = hermite_normal_form(IntMatrix.from_rows(kern, n))
    cols = [primitive(r) for r in Hk.rows() if any(r)]
    return IntMatrix.from_columns(cols, n)


def solve_in_rowspan(v: Sequence, M) -> RatVector | None:
    """Find ``c`` with ``c^T M = v^T`` exactly, or ``None`` if ``v`` is not in the row span.

    When the rows of ``M`` are dependent the free coefficients are set to zero.
    """
    M = as_intmatrix(M)
    m, n = M.shape
    if len(v) != n:
        raise ValueError(f"vector length {len(v)} does not match {n} columns")
    if m == 0:
        return () if all(x == 0 for x in v) else None
    # augmented system M^T c = v, one equation per column of M
    aug = [[Fraction(M[i, j]) for i in range(m)] + [Fraction(v[j])] for j in range(n)]
    red, pivots = rref(aug)
    if m in pivots:
        return None
    c = [Fraction(0)] * m
    for row, p in zip(red, pivots):
        c[p] = row[m]
    return tuple(c)
