"""Exact dense linear algebra over the rationals.

Every kernel computed by this package is the kernel of a matrix with rational
entries.  Gaussian elimination over Q then yields a Q-basis of that kernel,
and a Q-basis of the rational kernel is also a C-basis of the complex kernel
(row reduction never leaves the field of the entries), so complex dimensions
and spans can be read off from rational computations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CubicPoissonError

Vector = tuple  # tuple[Fraction, ...]


class InconsistentSystemError(CubicPoissonError, ValueError):
    """Raised by :func:`solve` when the right-hand side is not in the column space."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or 'p/q' strings")
    return Fraction(x)


def vec(values: Iterable) -> Vector:
    return tuple(as_fraction(v) for v in values)


class Matrix:
    """Immutable row-major matrix of ``Fraction`` entries."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        grid = tuple(vec(r) for r in rows)
        if ncols is None:
            ncols = len(grid[0]) if grid else 0
        if any(len(r) != ncols for r in grid):
            raise ValueError("ragged rows")
        self._rows = grid
        self.nrows = len(grid)
        self.ncols = ncols

    # construction helpers
    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Matrix:
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> Matrix:
        """Matrix unit E_ij of size n."""
        return cls([[int(r == i and c == j) for c in range(n)] for r in range(n)], n)

    @classmethod
    def diag(cls, values: Sequence) -> Matrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> Matrix:
        return cls([[c[i] for c in columns] for i in range(nrows)], len(columns))

    @classmethod
    def from_flat(cls, values: Sequence, n: int) -> Matrix:
        return cls([values[i * n:(i + 1) * n] for i in range(n)], n)

    # access
    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def rows(self) -> tuple[Vector, ...]:
        return self._rows

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def flatten(self) -> Vector:
        return tuple(x for r in self._rows for x in r)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    # arithmetic
    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.ncols
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.ncols
        )

    def __neg__(self) -> Matrix:
        return Matrix([[-a for a in r] for r in self._rows], self.ncols)

    def __mul__(self, c) -> Matrix:
        c = as_fraction(c)
        return Matrix([[c * a for a in r] for r in self._rows], self.ncols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            cols = [other.column(j) for j in range(other.ncols)]
            return Matrix(
                [[_dot(r, c) for c in cols] for r in self._rows], other.ncols
            )
        v = vec(other)
        if len(v) != self.ncols:
            raise ValueError(f"vector length {len(v)} does not match {self.shape}")
        return tuple(_dot(r, v) for r in self._rows)

    def transpose(self) -> Matrix:
        return Matrix([self.column(j) for j in range(self.ncols)], self.nrows)

    T = property(transpose)

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        return sum((self._rows[i][i] for i in range(self.nrows)), Fraction(0))

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        rows = [list(r) for r in self._rows]
        n = self.nrows
        d = Fraction(1)
        for k in range(n):
            p = next((i for i in range(k, n) if rows[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            if p != k:
                rows[k], rows[p] = rows[p], rows[k]
                d = -d
            d *= rows[k][k]
            for i in range(k + 1, n):
                factor = rows[i][k] / rows[k][k]
                if factor:
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[k])]
        return d

    def inverse(self) -> Matrix:
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = Matrix([r + tuple(Matrix.identity(n).row(i)) for i, r in enumerate(self._rows)])
        reduced, pivots = rref(aug)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix([r[n:] for r in reduced.rows], n)

    def _check_same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    # value semantics
    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"Matrix([{body}])"


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and the list of pivot columns."""
    rows = [list(r) for r in m.rows]
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        pivot_row = rows[r] = [x * inv if x else x for x in rows[r]]
        support = [j for j in range(c, ncols) if pivot_row[j]]
        for i in range(nrows):
            row = rows[i]
            if i != r and row[c]:
                factor = row[c]
                for j in support:
                    row[j] -= factor * pivot_row[j]
        pivots.append(c)
        r += 1
    return Matrix(rows, ncols), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix) -> list[Vector]:
    """Canonical kernel basis: one vector per free column, free entry set to 1."""
    reduced, pivots = rref(m)
    ncols = m.ncols
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, free]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b: Sequence) -> Vector:
    """Particular solution of ``m @ x == b`` with free variables set to zero.

    Raises :class:`InconsistentSystemError` when no solution exists.
    """
    b = vec(b)
    if len(b) != m.nrows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.nrows}")
    aug = Matrix([r + (bi,) for r, bi in zip(m.rows, b)], m.ncols + 1)
    reduced, pivots = rref(aug)
    if pivots and pivots[-1] == m.ncols:
        raise InconsistentSystemError("right-hand side is not in the column space")
    x = [Fraction(0)] * m.ncols
    for i, p in enumerate(pivots):
        x[p] = reduced[i, m.ncols]
    return tuple(x)


def row_space_basis(vectors: Sequence[Sequence], dim: int) -> list[Vector]:
    """Nonzero rows of the rref of the stacked vectors (a canonical span basis)."""
    if not vectors:
        return []
    reduced, pivots = rref(Matrix(vectors, dim))
    return [reduced.row(i) for i in range(len(pivots))]


def span_contains(basis: Sequence[Sequence], vectors: Sequence[Sequence], dim: int) -> bool:
    """True when every vector lies in the span of ``basis``."""
    base = rank(Matrix(basis, dim)) if basis else 0
    if not vectors:
        return True
    return rank(Matrix(list(basis) + list(vectors), dim)) == base


def same_span(a: Sequence[Sequence], b: Sequence[Sequence], dim: int) -> bool:
    return span_contains(a, b, dim) and span_contains(b, a, dim)


def coordinates(basis: Sequence[Sequence], v: Sequence, dim: int) -> Vector:
    """Coordinates of ``v`` in an independent ``basis``; raises if ``v`` is outside the span."""
    if not basis:
        if any(x != 0 for x in v):
            raise InconsistentSystemError("vector is not in the (zero) span")
        return ()
    return solve(Matrix.from_columns(basis, dim), v)


def charpoly(m: Matrix) -> list[Fraction]:
    """Characteristic polynomial det(xI - m), coefficients from x^0 up to the monic x^n.

    Faddeev-LeVerrier recursion; exact over Q.
    """
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.nrows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    ident = Matrix.identity(n)
    mk = Matrix.zeros(n, n)
    for k in range(1, n + 1):
        mk = m @ mk + ident * coeffs[n - k + 1]
        coeffs[n - k] = -(m @ mk).trace() / k
    return coeffs
