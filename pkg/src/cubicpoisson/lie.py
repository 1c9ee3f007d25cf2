"""Structure theory of finite-dimensional matrix Lie algebras over Q.

An algebra is given by a linearly independent list of n x n matrices closed
under the commutator.  Everything else (structure constants, center, series,
Killing form, radical) is derived exactly from that basis.

The radical is computed as the Killing-orthogonal complement of the derived
algebra, which is the solvable radical in characteristic zero.  The result is
then certified at runtime: it must be an ideal, solvable, and leave a quotient
with nondegenerate Killing form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import InternalInconsistencyError, PreconditionError
from .linalg import (
    InconsistentSystemError,
    Matrix,
    Vector,
    coordinates,
    nullspace,
    rank,
    row_space_basis,
    span_contains,
)

StructureConstants = list  # c[i][j][k]: [b_i, b_j] = sum_k c[i][j][k] b_k


def bracket(a: Matrix, b: Matrix) -> Matrix:
    """Matrix commutator ``ab - ba``."""
    if not (a.is_square() and b.is_square()) or a.shape != b.shape:
        raise ValueError(f"bracket needs square matrices of equal size, got {a.shape} and {b.shape}")
    return a @ b - b @ a


class LieSubalgebra:
    """Span of linearly independent n x n matrices.

    Closure under the bracket is not enforced at construction (see
    :func:`verify_closure`); operations that need structure constants raise
    :class:`PreconditionError` when the span is not closed.
    """

    def __init__(self, basis: Sequence[Matrix], ambient: int):
        basis = list(basis)
        for b in basis:
            if b.shape != (ambient, ambient):
                raise ValueError(f"basis matrix of shape {b.shape} in a {ambient}x{ambient} algebra")
        dim = ambient * ambient
        if basis and rank(Matrix([b.flatten() for b in basis], dim)) != len(basis):
            raise ValueError("basis matrices are linearly dependent")
        self.basis: tuple[Matrix, ...] = tuple(basis)
        self.ambient = ambient

    @classmethod
    def span(cls, matrices: Sequence[Matrix], ambient: int) -> LieSubalgebra:
        """Subspace spanned by arbitrary matrices, with a canonical (row-reduced) basis."""
        flat = [m.flatten() for m in matrices]
        rows = row_space_basis(flat, ambient * ambient)
        return cls([Matrix.from_flat(r, ambient) for r in rows], ambient)

    @classmethod
    def zero(cls, ambient: int) -> LieSubalgebra:
        return cls([], ambient)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def flat_basis(self) -> list[Vector]:
        return [b.flatten() for b in self.basis]

    def coordinates(self, m: Matrix) -> Vector:
        """Coordinates of an ambient matrix in this basis; raises if it lies outside."""
        return coordinates(self.flat_basis(), m.flatten(), self.ambient**2)

    def element(self, coords: Sequence) -> Matrix:
        out = Matrix.zeros(self.ambient, self.ambient)
        for c, b in zip(coords, self.basis):
            if c:
                out = out + b * c
        return out

    def contains(self, other: LieSubalgebra | Matrix) -> bool:
        vectors = other.flat_basis() if isinstance(other, LieSubalgebra) else [other.flatten()]
        return span_contains(self.flat_basis(), vectors, self.ambient**2)

    def same_space(self, other: LieSubalgebra) -> bool:
        return self.ambient == other.ambient and self.dim == other.dim and self.contains(other)

    def conjugate(self, p: Matrix) -> LieSubalgebra:
        """The algebra ``p g p^-1``."""
        pinv = p.inverse()
        return LieSubalgebra([p @ b @ pinv for b in self.basis], self.ambient)

    @cached_property
    def structure_constants(self) -> StructureConstants:
        n = self.dim
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                try:
                    coords = self.coordinates(bracket(self.basis[i], self.basis[j]))
                except InconsistentSystemError:
                    raise PreconditionError(
                        f"span is not closed under the bracket ([b{i}, b{j}] lies outside)"
                    ) from None
                c[i][j] = list(coords)
                c[j][i] = [-x for x in coords]
        return c

    def __repr__(self) -> str:
        return f"LieSubalgebra(dim={self.dim}, ambient={self.ambient})"


@dataclass(frozen=True)
class ClosureResult:
    closed: bool
    pair: tuple[int, int] | None = None
    residual: Matrix | None = None

    def __bool__(self) -> bool:
        return self.closed


def verify_closure(g: LieSubalgebra) -> ClosureResult:
    """Check that every pairwise bracket lies in the span; report the first offender."""
    flat = g.flat_basis()
    n2 = g.ambient**2
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            br = bracket(g.basis[i], g.basis[j])
            if not span_contains(flat, [br.flatten()], n2):
                return ClosureResult(False, (i, j), br)
    return ClosureResult(True)


def _subalgebra_from_coords(g: LieSubalgebra, coords: Sequence[Sequence]) -> LieSubalgebra:
    return LieSubalgebra([g.element(v) for v in coords], g.ambient)


def is_abelian(g: LieSubalgebra) -> bool:
    return all(x == 0 for plane in g.structure_constants for row in plane for x in row)


def center(g: LieSubalgebra) -> LieSubalgebra:
    c = g.structure_constants
    n = g.dim
    if n == 0:
        return g
    # x = sum x_i b_i is central iff sum_i x_i c[i][j][k] = 0 for all j, k
    rows = [[c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    return _subalgebra_from_coords(g, nullspace(Matrix(rows, n)))


def commutator_subspace(a: LieSubalgebra, b: LieSubalgebra) -> LieSubalgebra:
    """Span of all brackets [x, y] with x in a, y in b."""
    brackets = [bracket(x, y) for x in a.basis for y in b.basis]
    return LieSubalgebra.span(brackets, a.ambient)


def derived_algebra(g: LieSubalgebra) -> LieSubalgebra:
    return commutator_subspace(g, g)


def derived_series(g: LieSubalgebra) -> list[LieSubalgebra]:
    """g, [g,g], ... up to the zero algebra or the first repeated term (not repeated)."""
    series = [g]
    while series[-1].dim:
        nxt = derived_algebra(series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
    return series


def lower_central_series(g: LieSubalgebra) -> list[LieSubalgebra]:
    series = [g]
    while series[-1].dim:
        nxt = commutator_subspace(g, series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
    return series


def is_solvable(g: LieSubalgebra) -> bool:
    return derived_series(g)[-1].dim == 0


def is_nilpotent(g: LieSubalgebra) -> bool:
    return lower_central_series(g)[-1].dim == 0


def killing_from_constants(c: StructureConstants) -> Matrix:
    """K[i][j] = trace(ad b_i . ad b_j) where (ad b_i)[k][l] = c[i][l][k]."""
    n = len(c)
    k = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = sum(
                (c[i][l][m] * c[j][m][l] for l in range(n) for m in range(n) if c[i][l][m] and c[j][m][l]),
                Fraction(0),
            )
            k[i][j] = k[j][i] = t
    return Matrix(k, n)


def killing_form(g: LieSubalgebra) -> Matrix:
    return killing_from_constants(g.structure_constants)


def _quotient_constants(g: LieSubalgebra, ideal_coords: list[Vector]) -> StructureConstants:
    """Structure constants of g / ideal on a complement spanned by standard coordinate vectors."""
    n = g.dim
    chosen = list(ideal_coords)
    complement = []
    for i in range(n):
        e = tuple(Fraction(int(i == j)) for j in range(n))
        if not span_contains(chosen, [e], n):
            chosen.append(e)
            complement.append(e)
    r = len(ideal_coords)
    c = g.structure_constants

    def br(u, v):
        return [
            sum((u[i] * v[j] * c[i][j][k] for i in range(n) if u[i] for j in range(n) if v[j]), Fraction(0))
            for k in range(n)
        ]

    q = len(complement)
    out = [[[Fraction(0)] * q for _ in range(q)] for _ in range(q)]
    for a in range(q):
        for b in range(q):
            coords = coordinates(chosen, br(complement[a], complement[b]), n)
            out[a][b] = list(coords[r:])
    return out


def radical(g: LieSubalgebra) -> LieSubalgebra:
    """Maximal solvable ideal, certified (ideal, solvable, semisimple quotient)."""
    n = g.dim
    if n == 0:
        return g
    kf = killing_form(g)
    derived = derived_algebra(g)
    derived_coords = [g.coordinates(m) for m in derived.basis]
    rows = [kf @ d for d in derived_coords]
    rad_coords = nullspace(Matrix(rows, n)) if rows else [
        tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)
    ]
    rad = _subalgebra_from_coords(g, rad_coords)

    brackets = [bracket(x, y) for x in g.basis for y in rad.basis]
    if not rad.contains(LieSubalgebra.span(brackets, g.ambient)):
        raise InternalInconsistencyError("computed radical is not an ideal")
    if not is_solvable(rad):
        raise InternalInconsistencyError("computed radical is not solvable")
    quotient = _quotient_constants(g, rad_coords)
    if quotient and rank(killing_from_constants(quotient)) != len(quotient):
        raise InternalInconsistencyError("quotient by computed radical has degenerate Killing form")
    return rad


@dataclass(frozen=True)
class ReductivityVerdict:
    is_reductive: bool
    radical: LieSubalgebra
    center: LieSubalgebra

    @property
    def radical_dim(self) -> int:
        return self.radical.dim

    @property
    def center_dim(self) -> int:
        return self.center.dim


def is_reductive(g: LieSubalgebra) -> ReductivityVerdict:
    """Reductive iff the radical equals the center (the center always lies in the radical)."""
    rad = radical(g)
    cen = center(g)
    return ReductivityVerdict(cen.contains(rad), rad, cen)
