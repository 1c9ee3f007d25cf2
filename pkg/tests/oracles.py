"""Independent reference computations used by the tests.

Everything here goes through sympy (or plain loops) rather than the package's
own elimination and polynomial code, so agreement is a genuine cross-check.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import sympy as sp

from cubicpoisson.linalg import Matrix
from cubicpoisson.polynomial import HomPolynomial

Z = sp.symbols("z0:3")


def to_sympy_matrix(m: Matrix) -> sp.Matrix:
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in row] for row in m.rows])


def from_sympy_matrix(m: sp.Matrix) -> Matrix:
    return Matrix([[Fraction(int(sp.fraction(x)[0]), int(sp.fraction(x)[1])) for x in m.row(i)] for i in range(m.rows)])


def to_sympy_poly(f: HomPolynomial):
    z = sp.symbols(f"z0:{f.nvars}")
    expr = sp.Integer(0)
    for e, c in f.items():
        term = sp.Rational(c.numerator, c.denominator)
        for v, k in zip(z, e):
            term *= v**k
        expr += term
    return sp.expand(expr)


def from_sympy_poly(expr, nvars: int, degree: int) -> HomPolynomial:
    z = sp.symbols(f"z0:{nvars}")
    expr = sp.expand(expr)
    if expr == 0:
        return HomPolynomial.zero(nvars, degree)
    p = sp.Poly(expr, *z)
    return HomPolynomial(nvars, degree, {m: Fraction(int(sp.fraction(c)[0]), int(sp.fraction(c)[1])) for m, c in p.terms()})


def brute_force_action(a: Matrix, f: HomPolynomial) -> HomPolynomial:
    """V_a f by per-monomial differentiation in plain Python dictionaries."""
    n = f.nvars
    out: dict = {}
    for e, c in f.items():
        for i in range(n):
            if not e[i]:
                continue
            d = list(e)
            d[i] -= 1
            for j in range(n):
                if a[i, j] == 0:
                    continue
                m = list(d)
                m[j] += 1
                key = tuple(m)
                out[key] = out.get(key, Fraction(0)) + c * e[i] * a[i, j]
    return HomPolynomial(n, f.degree, out)


def sympy_annihilator_dim(f: HomPolynomial, divisor: bool = False) -> int:
    """Kernel dimension of a -> V_a f (or V_a f - lam f) on sl(3), via sympy symbolic solve."""
    a = sp.symbols("a0:9")
    lam = sp.Symbol("lam")
    A = sp.Matrix(3, 3, a)
    expr = to_sympy_poly(f)
    v = sum(sum(A[i, j] * Z[j] for j in range(3)) * sp.diff(expr, Z[i]) for i in range(3))
    if divisor:
        v -= lam * expr
    eqs = sp.Poly(sp.expand(v), *Z).coeffs() + [A.trace()]
    unknowns = list(a) + ([lam] if divisor else [])
    M, _ = sp.linear_eq_to_matrix(eqs, unknowns)
    return len(unknowns) - M.rank()


def structure_constants_oracle(basis: list[Matrix]) -> list:
    """c[i][j][k] by solving [b_i, b_j] = sum c_k b_k with sympy."""
    mats = [to_sympy_matrix(b) for b in basis]
    n = len(mats)
    if n == 0:
        return []
    B = sp.Matrix.hstack(*[m.reshape(m.rows * m.cols, 1) for m in mats])
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i, j in itertools.product(range(n), repeat=2):
        br = mats[i] * mats[j] - mats[j] * mats[i]
        sol, params = B.gauss_jordan_solve(br.reshape(br.rows * br.cols, 1))
        assert params.shape[0] == 0
        c[i][j] = list(sol)
    return c


def jacobi_holds(c) -> bool:
    n = len(c)
    for i, j, k, m in itertools.product(range(n), repeat=4):
        total = sum(
            c[j][k][l] * c[i][l][m] + c[k][i][l] * c[j][l][m] + c[i][j][l] * c[k][l][m]
            for l in range(n)
        )
        if total != 0:
            return False
    return True


def killing_oracle(c) -> sp.Matrix:
    n = len(c)
    ads = [sp.Matrix(n, n, lambda k, l: c[i][l][k]) for i in range(n)]
    return sp.Matrix(n, n, lambda i, j: (ads[i] * ads[j]).trace())


def killing_invariant(c) -> bool:
    """K([x,y],z) + K(y,[x,z]) = 0 on all basis triples."""
    n = len(c)
    K = killing_oracle(c)
    for x, y, z in itertools.product(range(n), repeat=3):
        lhs = sum(c[x][y][l] * K[l, z] for l in range(n)) + sum(c[x][z][l] * K[y, l] for l in range(n))
        if lhs != 0:
            return False
    return True


def span_rank(matrices: list[Matrix]) -> int:
    if not matrices:
        return 0
    return sp.Matrix([list(m.flatten()) for m in matrices]).rank()


def random_fraction(rng: random.Random, lo: int = -5, hi: int = 5, dens=(1, 1, 1, 2, 3)) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


def random_invertible(rng: random.Random, n: int = 3, lo: int = -3, hi: int = 3) -> Matrix:
    while True:
        m = Matrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])
        if m.det() != 0:
            return m


def random_traceless(rng: random.Random, n: int = 3) -> Matrix:
    rows = [[random_fraction(rng) for _ in range(n)] for _ in range(n)]
    rows[n - 1][n - 1] = -sum(rows[i][i] for i in range(n - 1))
    return Matrix(rows)


def random_form(rng: random.Random, nvars: int = 3, degree: int = 3, density: float = 0.5) -> HomPolynomial:
    from cubicpoisson.polynomial import monomials

    terms = {m: random_fraction(rng) for m in monomials(nvars, degree) if rng.random() < density}
    return HomPolynomial(nvars, degree, terms)
