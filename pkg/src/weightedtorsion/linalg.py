"""Dense matrices over the rationals.

Everything here works on :class:`fractions.Fraction` entries and is exact.
Matrices are immutable; a matrix may have zero rows or zero columns, which
is how empty chain groups and maps into/out of them are represented.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

import numpy as np

from .errors import NotPSD


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted in exact matrices")
    return Fraction(x)


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    x = to_fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


@dataclass(frozen=True)
class RationalMatrix:
    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> RationalMatrix:
        rows = tuple(tuple(to_fraction(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        return cls(rows, ncols)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> RationalMatrix:
        cols = [tuple(to_fraction(x) for x in c) for c in cols]
        for c in cols:
            if len(c) != nrows:
                raise ValueError("column length mismatch")
        rows = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls(rows, len(cols))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> RationalMatrix:
        zero = Fraction(0)
        return cls(tuple((zero,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, entries: Sequence) -> RationalMatrix:
        n = len(entries)
        zero = Fraction(0)
        rows = []
        for i, x in enumerate(entries):
            row = [zero] * n
            row[i] = to_fraction(x)
            rows.append(tuple(row))
        return cls(tuple(rows), n)

    # -- shape and access -------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def select_columns(self, idx: Sequence[int]) -> RationalMatrix:
        return RationalMatrix(tuple(tuple(r[j] for j in idx) for r in self.rows), len(idx))

    def select_rows(self, idx: Sequence[int]) -> RationalMatrix:
        return RationalMatrix(tuple(self.rows[i] for i in idx), self.ncols)

    def diagonal(self) -> list[Fraction]:
        return [self.rows[i][i] for i in range(min(self.shape))]

    @property
    def T(self) -> RationalMatrix:
        return RationalMatrix(tuple(zip(*self.rows)) if self.rows else
                              tuple(() for _ in range(self.ncols)), self.nrows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_diagonal(self) -> bool:
        return self.is_square() and all(
            x == 0 for i, r in enumerate(self.rows) for j, x in enumerate(r) if i != j)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self.rows],
                        dtype=float).reshape(self.shape)

    def to_json(self) -> list[list[str]]:
        return [[f"{x.numerator}/{x.denominator}" for x in r] for r in self.rows]

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"RationalMatrix({self.nrows}x{self.ncols}: [{body}])"

    # -- arithmetic -------------------------------------------------------

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        out = []
        for r in self.rows:
            nz = [(k, x) for k, x in enumerate(r) if x]
            out.append(tuple(sum((x * c[k] for k, x in nz), Fraction(0)) for c in cols))
        return RationalMatrix(tuple(out), other.ncols)

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(tuple(tuple(a + b for a, b in zip(r, s))
                                    for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        return self + other.scale(-1)

    def scale(self, c) -> RationalMatrix:
        c = to_fraction(c)
        return RationalMatrix(tuple(tuple(c * x for x in r) for r in self.rows), self.ncols)

    def hstack(self, other: RationalMatrix) -> RationalMatrix:
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return RationalMatrix(tuple(r + s for r, s in zip(self.rows, other.rows)),
                              self.ncols + other.ncols)

    def vstack(self, other: RationalMatrix) -> RationalMatrix:
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return RationalMatrix(self.rows + other.rows, self.ncols)

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        v = [to_fraction(x) for x in v]
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.rows)

    # -- elimination ------------------------------------------------------

    def rref(self) -> tuple[RationalMatrix, list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        m = [list(r) for r in self.rows]
        pivots = []
        prow = 0
        for c in range(self.ncols):
            if prow == len(m):
                break
            sel = next((i for i in range(prow, len(m)) if m[i][c] != 0), None)
            if sel is None:
                continue
            m[prow], m[sel] = m[sel], m[prow]
            p = m[prow][c]
            m[prow] = [x / p for x in m[prow]]
            for i in range(len(m)):
                if i != prow and m[i][c] != 0:
                    fac = m[i][c]
                    m[i] = [a - fac * b for a, b in zip(m[i], m[prow])]
            pivots.append(c)
            prow += 1
        return RationalMatrix(tuple(tuple(r) for r in m), self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> RationalMatrix:
        """Basis of the right kernel, as the columns of an ``ncols x k`` matrix.

        One basis vector per free column, with a 1 in that column.
        """
        r, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in pivots]
        vecs = []
        for fj in free:
            v = [Fraction(0)] * self.ncols
            v[fj] = Fraction(1)
            for i, pj in enumerate(pivots):
                v[pj] = -r.rows[i][fj]
            vecs.append(v)
        return RationalMatrix.from_columns(vecs, self.ncols)

    def column_basis(self) -> RationalMatrix:
        """The pivot columns of the matrix itself: a basis of its column space."""
        return self.select_columns(self.rref()[1])

    def solve(self, b: Sequence) -> tuple[Fraction, ...] | None:
        """One exact solution of ``self @ x = b`` (free variables set to 0), or None."""
        b = [to_fraction(x) for x in b]
        if len(b) != self.nrows:
            raise ValueError("right-hand side length mismatch")
        aug = self.hstack(RationalMatrix.from_columns([b], self.nrows))
        r, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [Fraction(0)] * self.ncols
        for i, pj in enumerate(pivots):
            x[pj] = r.rows[i][self.ncols]
        return tuple(x)

    def solve_columns(self, rhs: RationalMatrix) -> RationalMatrix | None:
        sols = []
        for col in rhs.columns():
            x = self.solve(col)
            if x is None:
                return None
            sols.append(x)
        return RationalMatrix.from_columns(sols, self.ncols)

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.rows]
        n = len(m)
        d = Fraction(1)
        for c in range(n):
            sel = next((i for i in range(c, n) if m[i][c] != 0), None)
            if sel is None:
                return Fraction(0)
            if sel != c:
                m[c], m[sel] = m[sel], m[c]
                d = -d
            p = m[c][c]
            d *= p
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    fac = m[i][c] / p
                    m[i] = [a - fac * b for a, b in zip(m[i], m[c])]
        return d

    def inverse(self) -> RationalMatrix:
        n = self.nrows
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        r, pivots = self.hstack(RationalMatrix.identity(n)).rref()
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise ZeroDivisionError("singular matrix")
        return RationalMatrix(tuple(row[n:] for row in r.rows), n)

    def charpoly(self) -> list[Fraction]:
        """Coefficients of ``det(xI - A)``, leading coefficient first.

        Berkowitz' division-free recurrence: each leading principal block
        extends the previous polynomial by a lower-triangular Toeplitz product.
        """
        if not self.is_square():
            raise ValueError("characteristic polynomial of a non-square matrix")
        a = self.rows
        poly = [Fraction(1)]
        for k in range(self.nrows):
            row = a[k][:k]
            col = [a[i][k] for i in range(k)]
            toeplitz = [Fraction(1), -a[k][k]]
            vec = col
            for _ in range(k):
                toeplitz.append(-sum((x * y for x, y in zip(row, vec)), Fraction(0)))
                vec = [sum((a[i][j] * vec[j] for j in range(k)), Fraction(0)) for i in range(k)]
            poly = [sum((toeplitz[i - j] * poly[j] for j in range(min(i, k) + 1)), Fraction(0))
                    for i in range(k + 2)]
        return poly


def column_span_contains(basis: RationalMatrix, vectors: RationalMatrix) -> bool:
    """True if every column of ``vectors`` lies in the column span of ``basis``."""
    if vectors.ncols == 0:
        return True
    if basis.ncols == 0:
        return vectors.is_zero()
    return basis.hstack(vectors).rank() == basis.rank()


def same_column_span(a: RationalMatrix, b: RationalMatrix) -> bool:
    return column_span_contains(a, b) and column_span_contains(b, a)


def psd_certificate(a: RationalMatrix) -> bool:
    """Exact PSD test by symmetric elimination with diagonal pivoting.

    A positive diagonal pivot is eliminated symmetrically; a zero diagonal
    forces its whole row to vanish; a negative diagonal refutes PSD.
    """
    if not a.is_symmetric():
        return False
    m = [list(r) for r in a.rows]
    live = list(range(len(m)))
    while live:
        piv = next((i for i in live if m[i][i] > 0), None)
        if any(m[i][i] < 0 for i in live):
            return False
        if piv is None:
            return all(m[i][j] == 0 for i in live for j in live)
        live.remove(piv)
        p = m[piv][piv]
        for i in live:
            if m[i][piv] != 0:
                fac = m[i][piv] / p
                for j in live:
                    m[i][j] -= fac * m[piv][j]
    return True


def require_psd(a: RationalMatrix) -> None:
    if not psd_certificate(a):
        raise NotPSD("Gram matrix is not symmetric positive semi-definite")


def pseudo_determinant(a: RationalMatrix) -> Fraction:
    """Product of the nonzero eigenvalues, read off the characteristic polynomial.

    For a diagonalizable matrix of rank r this is ``(-1)^r`` times the
    coefficient of ``x^(n-r)``; the zero matrix (and the 0x0 matrix) give 1.
    """
    poly = a.charpoly()
    n = a.nrows
    # lowest-order nonzero coefficient sits at index n - mult(0)
    for k in range(n, -1, -1):
        if poly[k] != 0:
            return abs(poly[k]) if k else Fraction(1)
    return Fraction(1)
