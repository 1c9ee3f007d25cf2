"""Sparse homogeneous polynomials over Q.

Terms are kept in graded lexicographic order with z0 > z1 > z2 > ...; within a
single degree this is plain lexicographic order on exponent vectors, which is
what every rendering, coefficient vector and normalization in the package uses.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .errors import DegreeMismatchError, PreconditionError
from .linalg import InconsistentSystemError, Matrix, as_fraction, nullspace, solve

Exponent = tuple  # tuple[int, ...]


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[Exponent, ...]:
    """All exponent vectors of the given degree, largest first."""
    if degree < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(sorted(out, reverse=True))


@lru_cache(maxsize=None)
def _monomial_index(nvars: int, degree: int) -> dict:
    return {e: i for i, e in enumerate(monomials(nvars, degree))}


class HomPolynomial:
    """A homogeneous polynomial with rational coefficients.

    The zero polynomial has no terms but still carries a degree so that
    it can be added to other forms of that degree.
    """

    __slots__ = ("nvars", "degree", "_terms")

    def __init__(self, nvars: int, degree: int, terms: Mapping[Exponent, object] | None = None):
        if nvars < 1 or degree < 0:
            raise ValueError("nvars must be positive and degree nonnegative")
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for {nvars} variables")
            if sum(e) != degree:
                raise DegreeMismatchError(f"monomial {e} does not have degree {degree}")
            c = as_fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        self.nvars = nvars
        self.degree = degree
        self._terms = tuple(sorted(((e, c) for e, c in clean.items() if c), reverse=True))

    # constructors
    @classmethod
    def zero(cls, nvars: int, degree: int) -> HomPolynomial:
        return cls(nvars, degree)

    @classmethod
    def constant(cls, c, nvars: int) -> HomPolynomial:
        return cls(nvars, 0, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int) -> HomPolynomial:
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, 1, {tuple(e): 1})

    @classmethod
    def linear_form(cls, coeffs: Sequence) -> HomPolynomial:
        n = len(coeffs)
        return cls(n, 1, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})

    @classmethod
    def from_vector(cls, values: Sequence, nvars: int, degree: int) -> HomPolynomial:
        return cls(nvars, degree, dict(zip(monomials(nvars, degree), values)))

    @classmethod
    def parse(cls, text: str, nvars: int = 3) -> HomPolynomial:
        from .parser import parse

        return parse(text, nvars)

    # access
    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def coefficient(self, e: Exponent) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def leading_coefficient(self) -> Fraction:
        return self._terms[0][1] if self._terms else Fraction(0)

    def depends_on(self, i: int) -> bool:
        return any(e[i] for e, _ in self._terms)

    def coefficient_vector(self) -> tuple[Fraction, ...]:
        """Coefficients over ``monomials(nvars, degree)``."""
        idx = _monomial_index(self.nvars, self.degree)
        v = [Fraction(0)] * len(idx)
        for e, c in self._terms:
            v[idx[e]] = c
        return tuple(v)

    # ring operations
    def _check_compatible(self, other: HomPolynomial) -> None:
        if self.nvars != other.nvars or self.degree != other.degree:
            raise DegreeMismatchError(
                f"cannot add forms of (nvars, degree) {(self.nvars, self.degree)} "
                f"and {(other.nvars, other.degree)}"
            )

    def __add__(self, other: HomPolynomial) -> HomPolynomial:
        self._check_compatible(other)
        t = self.terms
        for e, c in other._terms:
            t[e] = t.get(e, Fraction(0)) + c
        return HomPolynomial(self.nvars, self.degree, t)

    def __neg__(self) -> HomPolynomial:
        return HomPolynomial(self.nvars, self.degree, {e: -c for e, c in self._terms})

    def __sub__(self, other: HomPolynomial) -> HomPolynomial:
        return self + (-other)

    def scale(self, c) -> HomPolynomial:
        c = as_fraction(c)
        return HomPolynomial(self.nvars, self.degree, {e: c * x for e, x in self._terms})

    def __mul__(self, other) -> HomPolynomial:
        if not isinstance(other, HomPolynomial):
            return self.scale(other)
        if self.nvars != other.nvars:
            raise DegreeMismatchError("cannot multiply forms in different numbers of variables")
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return HomPolynomial(self.nvars, self.degree + other.degree, out)

    def __rmul__(self, c) -> HomPolynomial:
        return self.scale(c)

    def __pow__(self, k: int) -> HomPolynomial:
        if k < 0:
            raise ValueError("negative exponent")
        result = HomPolynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def partial(self, i: int) -> HomPolynomial:
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range")
        if self.degree == 0:
            return HomPolynomial.zero(self.nvars, 0)
        out = {}
        for e, c in self._terms:
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return HomPolynomial(self.nvars, self.degree - 1, out)

    def gradient(self) -> tuple[HomPolynomial, ...]:
        return tuple(self.partial(i) for i in range(self.nvars))

    def evaluate(self, point: Sequence) -> Fraction:
        pt = [as_fraction(x) for x in point]
        if len(pt) != self.nvars:
            raise ValueError("point has the wrong number of coordinates")
        total = Fraction(0)
        for e, c in self._terms:
            term = c
            for x, k in zip(pt, e):
                if k:
                    term *= x**k
            total += term
        return total

    def apply_transform(self, g: Matrix | ProjectiveTransform) -> HomPolynomial:
        """Return ``z -> f(g z)``: each variable z_i becomes the linear form row i of g."""
        m = g.matrix if isinstance(g, ProjectiveTransform) else g
        if m.shape != (self.nvars, self.nvars):
            raise DegreeMismatchError("transform size does not match the number of variables")
        forms = [HomPolynomial.linear_form(m.row(i)) for i in range(self.nvars)]
        powers: dict[tuple[int, int], HomPolynomial] = {}

        def power(i: int, k: int) -> HomPolynomial:
            if (i, k) not in powers:
                powers[(i, k)] = forms[i] ** k
            return powers[(i, k)]

        result = HomPolynomial.zero(self.nvars, self.degree)
        for e, c in self._terms:
            term = HomPolynomial.constant(c, self.nvars)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def monic(self) -> HomPolynomial:
        """Scale so that the leading coefficient (graded lex) is 1."""
        if self.is_zero():
            return self
        return self.scale(1 / self.leading_coefficient())

    def divide_exact(self, divisor: HomPolynomial) -> HomPolynomial:
        """Quotient ``self / divisor``; raises ``ValueError`` unless the division is exact."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        qdeg = self.degree - divisor.degree
        if qdeg < 0:
            if self.is_zero():
                raise ValueError("degree of divisor exceeds degree of dividend")
            raise ValueError("not divisible")
        if self.is_zero():
            return HomPolynomial.zero(self.nvars, qdeg)
        try:
            q = solve(multiplication_matrix(divisor, qdeg), self.coefficient_vector())
        except InconsistentSystemError:
            raise ValueError("not divisible") from None
        return HomPolynomial.from_vector(q, self.nvars, qdeg)

    def divides(self, other: HomPolynomial) -> bool:
        try:
            other.divide_exact(self)
        except ValueError:
            return False
        return True

    # value semantics
    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HomPolynomial)
            and self.nvars == other.nvars
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.degree, self._terms))

    def render(self) -> str:
        """Canonical text form, accepted back by :func:`cubicpoisson.parser.parse`."""
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self._terms:
            mono = "*".join(
                f"z{i}" if k == 1 else f"z{i}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            pieces.append((c < 0, body))
        neg, body = pieces[0]
        out = ("-" if neg else "") + body
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    __str__ = render

    def __repr__(self) -> str:
        return f"HomPolynomial({self.render()!r}, nvars={self.nvars}, degree={self.degree})"


class ProjectiveTransform:
    """An invertible linear change of coordinates on projective space."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Matrix | Sequence[Sequence]):
        m = matrix if isinstance(matrix, Matrix) else Matrix(matrix)
        if not m.is_square() or m.det() == 0:
            raise PreconditionError("projective transform must be a nonsingular square matrix")
        self.matrix = m

    def __matmul__(self, other: ProjectiveTransform) -> ProjectiveTransform:
        return ProjectiveTransform(self.matrix @ other.matrix)

    def inverse(self) -> ProjectiveTransform:
        return ProjectiveTransform(self.matrix.inverse())

    def __repr__(self) -> str:
        return f"ProjectiveTransform({self.matrix!r})"


def multiplication_matrix(p: HomPolynomial, src_degree: int) -> Matrix:
    """Matrix of ``u -> p*u`` from forms of ``src_degree`` to forms of degree ``p.degree + src_degree``."""
    nvars = p.nvars
    target = _monomial_index(nvars, p.degree + src_degree)
    cols = []
    for m in monomials(nvars, src_degree):
        col = [Fraction(0)] * len(target)
        for e, c in p.items():
            col[target[tuple(a + b for a, b in zip(e, m))]] += c
        cols.append(col)
    return Matrix.from_columns(cols, len(target))


def _gcd2(p: HomPolynomial, q: HomPolynomial) -> HomPolynomial:
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    a, b = p.degree, q.degree
    nvars = p.nvars
    # deg gcd(p, q) is the largest e for which u*p + v*q = 0 has a nonzero
    # solution with deg u = b - e, deg v = a - e; that solution is u = c*q/gcd.
    for e in range(min(a, b), 0, -1):
        mp = multiplication_matrix(p, b - e)
        mq = multiplication_matrix(q, a - e)
        stacked = Matrix([r1 + r2 for r1, r2 in zip(mp.rows, mq.rows)], mp.ncols + mq.ncols)
        kernel = nullspace(stacked)
        if kernel:
            u = HomPolynomial.from_vector(kernel[0][: mp.ncols], nvars, b - e)
            return q.divide_exact(u).monic()
    return HomPolynomial.constant(1, nvars)


def gcd(*polys: HomPolynomial) -> HomPolynomial:
    """Monic greatest common divisor of homogeneous forms (zero forms are ignored)."""
    if not polys:
        raise ValueError("gcd of nothing")
    nvars = polys[0].nvars
    if any(p.nvars != nvars for p in polys):
        raise DegreeMismatchError("gcd of forms in different numbers of variables")
    g = HomPolynomial.zero(nvars, 0)
    for p in polys:
        g = _gcd2(g, p) if not g.is_zero() else p.monic()
        if not g.is_zero() and g.degree == 0:
            return HomPolynomial.constant(1, nvars)
    return g


def gcd_partials(f: HomPolynomial) -> HomPolynomial:
    """Monic gcd of all first partial derivatives of ``f``."""
    if f.degree < 1:
        raise PreconditionError("gcd_partials needs a form of positive degree")
    return gcd(*f.gradient())


def factor_squarefree(f: HomPolynomial) -> tuple[Fraction, list[tuple[HomPolynomial, int]]]:
    """Squarefree decomposition ``f = c * prod(f_i ** m_i)``.

    Factors are monic, squarefree and pairwise coprime; they are listed by
    decreasing multiplicity.  Uses gcd(f, all partials) = prod f_i**(m_i - 1),
    valid in characteristic zero by the Euler identity.
    """
    if f.is_zero():
        raise PreconditionError("squarefree decomposition of the zero polynomial")
    c = f.leading_coefficient()
    if f.degree == 0:
        return c, []
    g = gcd(f, *f.gradient())
    w = f.divide_exact(g).monic()
    rest = g
    factors = []
    m = 1
    while rest.degree > 0:
        y = gcd(w, rest)
        z = w.divide_exact(y).monic()
        if z.degree > 0:
            factors.append((z, m))
        w = y
        rest = rest.divide_exact(y)
        m += 1
    if w.degree > 0:
        factors.append((w.monic(), m))
    factors.sort(key=lambda fm: -fm[1])
    return c, factors


def expand_factors(c, factors: Iterable[tuple[HomPolynomial, int]], nvars: int) -> HomPolynomial:
    out = HomPolynomial.constant(c, nvars)
    for p, m in factors:
        out = out * p**m
    return out
