"""Linear vector fields acting on homogeneous forms, and their annihilators.

A traceless matrix ``a`` induces the vector field

    V_a = sum_i (sum_j a[i][j] z_j) d/dz_i

on C^n, i.e. the matrix acts on the coordinate column and the field is
``(a z) . grad``.  On P^2 a cubic ``f`` is a section of the anticanonical
bundle; the Lie derivative of that section along the field of ``a`` is
``V_a f - tr(a) f``, and for ``a`` in sl(3) the trace term vanishes.  So the
algebra of projective vector fields preserving the Poisson structure defined
by ``f`` is exactly ``{a in sl(3) : V_a f = 0}`` (``strict`` mode).

The representation itself is ``act(a, f) = -V_a f``, the derivative at
``t = 0`` of ``f(exp(-t a) z)``.  The sign is what makes ``a -> act(a, .)``
preserve brackets: ``[V_a, V_b] = V_[b,a]``, so ``V`` alone reverses them.
Kernels do not depend on the sign.

``divisor`` mode instead asks only that the curve ``f = 0`` be preserved,
``act(a, f) = lam * f`` for some scalar ``lam``; it always contains the strict
algebra.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Sequence

from .errors import DegreeMismatchError, InternalInconsistencyError, PreconditionError
from .lie import LieSubalgebra, verify_closure
from .linalg import Matrix, as_fraction, nullspace, rank
from .polynomial import HomPolynomial, monomials


class Mode(str, enum.Enum):
    STRICT = "strict"
    DIVISOR = "divisor"

    def __str__(self) -> str:
        return self.value


def sl_basis(n: int) -> list[Matrix]:
    """Off-diagonal units E_ij (row-major), then E_ii - E_{i+1,i+1}."""
    if n < 2:
        raise ValueError("sl(n) needs n >= 2")
    out = [Matrix.unit(n, i, j) for i in range(n) for j in range(n) if i != j]
    out += [Matrix.unit(n, i, i) - Matrix.unit(n, i + 1, i + 1) for i in range(n - 1)]
    return out


def sl_algebra(n: int) -> LieSubalgebra:
    return LieSubalgebra(sl_basis(n), n)


def act(a: Matrix, f: HomPolynomial) -> HomPolynomial:
    """``-V_a f``: the infinitesimal action of ``a`` on forms (a Lie algebra homomorphism)."""
    n = f.nvars
    if a.shape != (n, n):
        raise DegreeMismatchError(f"matrix of shape {a.shape} cannot act on forms in {n} variables")
    result = HomPolynomial.zero(n, f.degree)
    if f.degree == 0:
        return result
    for i in range(n):
        row = a.row(i)
        if any(row):
            result = result - HomPolynomial.linear_form(row) * f.partial(i)
    return result


def action_matrix(f: HomPolynomial) -> Matrix:
    """Matrix of ``a -> act(a, f)`` from sl(n) (basis :func:`sl_basis`) to forms of degree ``f.degree``."""
    columns = [act(b, f).coefficient_vector() for b in sl_basis(f.nvars)]
    return Matrix.from_columns(columns, len(monomials(f.nvars, f.degree)))


class PoissonAlgebra(LieSubalgebra):
    """Annihilator of a form: a Lie subalgebra of sl(n) remembering how it was obtained.

    ``weights[k]`` is the scalar ``lam`` with ``act(b_k, f) = lam * f`` (all zero in strict mode).
    """

    def __init__(self, basis: Sequence[Matrix], ambient: int, form: HomPolynomial,
                 mode: Mode, weights: Sequence[Fraction]):
        super().__init__(basis, ambient)
        self.form = form
        self.mode = Mode(mode)
        self.weights = tuple(weights)

    def __repr__(self) -> str:
        return f"PoissonAlgebra(f={self.form.render()!r}, mode={self.mode.value}, dim={self.dim})"


def annihilator(f: HomPolynomial, mode: Mode | str = Mode.STRICT) -> PoissonAlgebra:
    """Elements ``a`` of sl(n) with ``act(a, f) = 0`` (strict) or proportional to ``f`` (divisor).

    The returned basis is the canonical kernel basis in sl-coordinates, so it
    is deterministic.  Bracket closure is checked before returning.
    """
    mode = Mode(mode)
    if f.is_zero():
        raise PreconditionError("annihilator of the zero form is all of sl(n)")
    n = f.nvars
    basis = sl_basis(n)
    m = action_matrix(f)
    if mode is Mode.STRICT:
        kernel = [(v, Fraction(0)) for v in nullspace(m)]
    else:
        fv = f.coefficient_vector()
        augmented = Matrix([row + (-c,) for row, c in zip(m.rows, fv)], m.ncols + 1)
        kernel = [(v[:-1], v[-1]) for v in nullspace(augmented)]

    matrices = []
    for coords, _ in kernel:
        a = Matrix.zeros(n, n)
        for c, b in zip(coords, basis):
            if c:
                a = a + b * c
        matrices.append(a)
    g = PoissonAlgebra(matrices, n, f, mode, [lam for _, lam in kernel])
    closure = verify_closure(g)
    if not closure:
        raise InternalInconsistencyError(
            f"{mode.value} annihilator is not bracket-closed (pair {closure.pair})"
        )
    return g


def type_number(f: HomPolynomial, point: Sequence) -> int:
    """Type number of the Poisson-deformed structure at a point of P^2.

    In the affine chart around the point the Poisson bivector is a nonzero
    multiple of ``f * d/du ^ d/dv``; its rank is 2 off the curve and 0 on it,
    and the type is ``n - 2 * (rank / 2)`` with ``n = 2``.
    """
    if f.nvars != 3 or f.degree != 3:
        raise PreconditionError("type_number is defined for plane cubics")
    pt = [as_fraction(x) for x in point]
    if len(pt) != 3:
        raise PreconditionError("point must have three homogeneous coordinates")
    if all(x == 0 for x in pt):
        raise PreconditionError("[0:0:0] is not a point of the projective plane")
    chart = next(i for i, x in enumerate(pt) if x != 0)
    value = f.evaluate([x / pt[chart] for x in pt])
    bivector = Matrix([[0, value], [-value, 0]])
    complex_dim = 2
    return complex_dim - 2 * (rank(bivector) // 2)
