"""Projective classification of plane cubics over Q into the nine classical types.

Non-reduced cubics are recognised from the gcd of the partial derivatives.
For reduced cubics the singular scheme ``{df = 0}`` is finite, and its
coordinate ring in a high enough degree, ``A = (S / J)_d`` with ``J`` the
Jacobian ideal, has dimension equal to the total Tjurina number.  For a
linear form ``l`` vanishing at no singular point, multiplication by ``l'/l``
acts on ``A`` with one eigenvalue ``l'(p)/l(p)`` per singular point ``p``,
of algebraic multiplicity equal to the Tjurina number at ``p``.  Reading the
characteristic polynomial therefore gives the number of singular points over
the algebraic closure and their local Tjurina numbers without any
algebraic-number arithmetic:

=====================  ===============
local Tjurina numbers  type
=====================  ===============
(none)                 smooth
1                      node
2                      cusp
3                      tacnode (conic + tangent line)
4                      ordinary triple point (concurrent lines)
1, 1                   conic + secant line
1, 1, 1                triangle
=====================  ===============

Rational singular points are located exactly, and their multiplicity and
tangent cone are cross-checked against the table.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import InternalInconsistencyError, PreconditionError
from .linalg import Matrix, Vector, charpoly, nullspace, rank, rref, solve
from .parser import parse
from .polynomial import HomPolynomial, factor_squarefree, gcd_partials, monomials, multiplication_matrix

JACOBIAN_DEGREE = 6


class CurveType(str, enum.Enum):
    SMOOTH_ELLIPTIC = "SmoothElliptic"
    NODAL = "Nodal"
    CUSPIDAL = "Cuspidal"
    CONIC_LINE_GENERAL = "ConicLineGeneral"
    CONIC_LINE_TANGENT = "ConicLineTangent"
    THREE_LINES_GENERAL = "ThreeLinesGeneral"
    THREE_LINES_CONCURRENT = "ThreeLinesConcurrent"
    DOUBLE_LINE_PLUS_LINE = "DoubleLinePlusLine"
    TRIPLE_LINE = "TripleLine"

    def __str__(self) -> str:
        return self.value

    @property
    def index(self) -> int:
        return list(CurveType).index(self) + 1

    @property
    def description(self) -> str:
        return _DESCRIPTIONS[self]


_DESCRIPTIONS = {
    CurveType.SMOOTH_ELLIPTIC: "smooth elliptic curve",
    CurveType.NODAL: "nodal cubic",
    CurveType.CUSPIDAL: "cuspidal cubic",
    CurveType.CONIC_LINE_GENERAL: "conic and line in general position",
    CurveType.CONIC_LINE_TANGENT: "conic and tangent line",
    CurveType.THREE_LINES_GENERAL: "three lines in general position",
    CurveType.THREE_LINES_CONCURRENT: "three lines through one point",
    CurveType.DOUBLE_LINE_PLUS_LINE: "double line and a line",
    CurveType.TRIPLE_LINE: "triple line",
}

NORMAL_FORMS: dict[CurveType, str] = {
    CurveType.SMOOTH_ELLIPTIC: "z0^3 + z1^3 + z2^3",
    CurveType.NODAL: "z1^2*z2 - z0^3 - z0^2*z2",
    CurveType.CUSPIDAL: "z1^2*z2 - z0^3",
    CurveType.CONIC_LINE_GENERAL: "z2*(z0^2 + z1^2 - z2^2)",
    CurveType.CONIC_LINE_TANGENT: "(z1 - z2)*(z0^2 + z1^2 - z2^2)",
    CurveType.THREE_LINES_GENERAL: "z0*z1*z2",
    CurveType.THREE_LINES_CONCURRENT: "z0*z1*(z0 + z1)",
    CurveType.DOUBLE_LINE_PLUS_LINE: "z0^2*z1",
    CurveType.TRIPLE_LINE: "z0^3",
}

_BY_TJURINA = {
    (): CurveType.SMOOTH_ELLIPTIC,
    (1,): CurveType.NODAL,
    (2,): CurveType.CUSPIDAL,
    (3,): CurveType.CONIC_LINE_TANGENT,
    (4,): CurveType.THREE_LINES_CONCURRENT,
    (1, 1): CurveType.CONIC_LINE_GENERAL,
    (1, 1, 1): CurveType.THREE_LINES_GENERAL,
}

# (multiplicity, distinct tangent lines) expected at the unique singular point
_SINGLE_POINT_GERMS = {
    CurveType.NODAL: (2, 2),
    CurveType.CUSPIDAL: (2, 1),
    CurveType.CONIC_LINE_TANGENT: (2, 1),
    CurveType.THREE_LINES_CONCURRENT: (3, 3),
}


def normal_form(t: CurveType | str) -> HomPolynomial:
    return parse(NORMAL_FORMS[CurveType(t)], 3)


@dataclass(frozen=True)
class SingularPoint:
    coordinates: tuple[Fraction, Fraction, Fraction]
    multiplicity: int
    tangent_directions: int  # distinct lines of the tangent cone over the algebraic closure
    tjurina: int


@dataclass(frozen=True)
class SingularData:
    reduced: bool
    repeated_factor_degree: int
    singular_count_over_closure: int | str  # "infinite" for non-reduced curves
    tjurina_numbers: tuple[int, ...] = ()
    rational_singular_points: tuple[SingularPoint, ...] = field(default_factory=tuple)

    @property
    def total_tjurina(self) -> int:
        return sum(self.tjurina_numbers)


def _check_cubic(f: HomPolynomial) -> None:
    if f.nvars != 3 or f.degree != 3 or f.is_zero():
        raise PreconditionError(
            f"expected a nonzero cubic form in z0, z1, z2; got degree {f.degree} in {f.nvars} variables"
            + (" (zero polynomial)" if f.is_zero() else "")
        )


# -- univariate helpers (coefficient lists, constant term first) -----------

def _trim(p: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _peval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _prem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = _trim(a)
    b = _trim(b)
    while len(a) >= len(b):
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        a = _trim(a)
    return a


def _sturm(p: list[Fraction]) -> list[list[Fraction]]:
    seq = [_trim(p), _trim([i * c for i, c in enumerate(p)][1:])]
    while seq[-1]:
        r = _prem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def _sign_changes(seq: list[list[Fraction]], x: Fraction) -> int:
    signs = [v for v in (_peval(s, x) for s in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def rational_roots(p: Sequence[Fraction]) -> list[Fraction]:
    """Distinct rational roots of a nonzero univariate polynomial, increasing.

    Real roots are isolated with a Sturm sequence and narrowed until the
    denominator bound from the leading coefficient leaves one candidate.
    """
    p = _trim([Fraction(c) for c in p])
    if len(p) <= 1:
        return []
    scale = lcm(*(c.denominator for c in p))
    ints = [int(c * scale) for c in p]
    lead = abs(ints[-1])
    bound = 1 + max(Fraction(abs(c), lead) for c in ints[:-1])
    seq = _sturm([Fraction(c) for c in ints])
    width_target = Fraction(1, lead * lead)
    roots = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        count = _sign_changes(seq, lo) - _sign_changes(seq, hi)
        if count == 0:
            continue
        mid = (lo + hi) / 2
        if count > 1 or hi - lo >= width_target:
            stack.extend([(lo, mid), (mid, hi)])
            continue
        candidate = mid.limit_denominator(lead)
        if lo < candidate <= hi and _peval(ints, candidate) == 0:
            roots.append(candidate)
    return sorted(roots)


# -- Jacobian algebra --------------------------------------------------------

class _GradedQuotient:
    """The degree-d piece of S / J with a reducer onto standard monomials."""

    def __init__(self, grad: Sequence[HomPolynomial], d: int):
        rows = []
        for g in grad:
            if not g.is_zero():
                m = multiplication_matrix(g, d - g.degree)
                rows.extend(m.column(j) for j in range(m.ncols))
        n = len(monomials(3, d))
        reduced, pivots = rref(Matrix(rows, n)) if rows else (Matrix([], n), [])
        self.degree = d
        self.pivot_rows = [(p, reduced.row(i)) for i, p in enumerate(pivots)]
        pivot_set = set(pivots)
        self.standard = [j for j in range(n) if j not in pivot_set]
        self.index = {e: i for i, e in enumerate(monomials(3, d))}

    @property
    def dim(self) -> int:
        return len(self.standard)

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        v = list(v)
        for p, row in self.pivot_rows:
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return tuple(v[j] for j in self.standard)


def _multiplication_operator(src: _GradedQuotient, dst: _GradedQuotient, form: HomPolynomial) -> Matrix:
    mons = monomials(3, src.degree)
    cols = []
    for j in src.standard:
        prod = form * HomPolynomial(3, src.degree, {mons[j]: 1})
        cols.append(dst.reduce(prod.coefficient_vector()))
    return Matrix.from_columns(cols, dst.dim)


def _moment_form(s: int) -> HomPolynomial:
    return HomPolynomial.linear_form([1, s, s * s])


def _as_binary_form(coeffs: Sequence[Fraction]) -> HomPolynomial:
    """Homogenise a univariate polynomial (constant term first) in variables (x, y)."""
    n = len(coeffs) - 1
    return HomPolynomial(2, n, {(k, n - k): c for k, c in enumerate(coeffs)})


def _root_multiplicities(coeffs: Sequence[Fraction]) -> tuple[tuple[int, ...], list[Fraction]]:
    """Sorted root multiplicities over the closure, and the squarefree part."""
    _, factors = factor_squarefree(_as_binary_form(coeffs))
    radical = HomPolynomial.constant(1, 2)
    for p, _ in factors:
        radical = radical * p
    part = [radical.coefficient((k, radical.degree - k)) for k in range(radical.degree + 1)]
    return tuple(sorted(m for p, m in factors for _ in range(p.degree))), part


def _restricted_trace(op: Matrix, subspace: list[Vector]) -> Fraction:
    basis = Matrix.from_columns(subspace, op.nrows)
    return sum((solve(basis, op @ w)[k] for k, w in enumerate(subspace)), Fraction(0))


def _normalize_point(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    lead = next(x for x in p if x != 0)
    return tuple(x / lead for x in p)


def _local_germ(f: HomPolynomial, point: Sequence[Fraction]) -> tuple[int, int]:
    """Multiplicity and number of distinct tangent lines of ``f`` at a rational point."""
    k = next(i for i, x in enumerate(point) if x != 0)
    others = [i for i in range(3) if i != k]
    cols = [[int(r == others[0]) for r in range(3)], [int(r == others[1]) for r in range(3)], list(point)]
    g = Matrix.from_columns(cols, 3)
    h = f.apply_transform(g)  # the point sits at [0:0:1]
    mult = min(e[0] + e[1] for e, _ in h.items())
    cone = HomPolynomial(2, mult, {(e[0], e[1]): c for e, c in h.items() if e[0] + e[1] == mult})
    _, factors = factor_squarefree(cone)
    return mult, sum(p.degree for p, _ in factors)


def _reduced_singularities(f: HomPolynomial) -> tuple[tuple[int, ...], tuple[SingularPoint, ...]]:
    grad = f.gradient()
    d = JACOBIAN_DEGREE
    a_d = _GradedQuotient(grad, d)
    a_next = _GradedQuotient(grad, d + 1)
    tau = a_d.dim
    if a_next.dim != tau:
        raise InternalInconsistencyError(
            f"Hilbert function of the Jacobian ring not stable in degree {d}: {tau} vs {a_next.dim}"
        )
    if tau == 0:
        return (), ()

    # a linear form avoiding every singular point: each point rules out <= 2 values of s
    for s in range(2 * tau + 1):
        lmul = _multiplication_operator(a_d, a_next, _moment_form(s))
        if rank(lmul) == tau:
            break
    else:
        raise InternalInconsistencyError("no linear form is a nonzerodivisor on the Jacobian ring")
    linv = lmul.inverse()

    # each pair of points collides for <= 2 values of t (t = s is one of them)
    best = None
    for t in range(tau * (tau - 1) + 2):
        if t == s:
            continue
        op = linv @ _multiplication_operator(a_d, a_next, _moment_form(t))
        poly = charpoly(op)
        mults, part = _root_multiplicities(poly)
        if best is None or len(mults) > len(best[0]):
            best = (mults, op, part)
        if len(mults) == tau:
            break
    mults, op, part = best

    coordinate_ops = [
        linv @ _multiplication_operator(a_d, a_next, HomPolynomial.variable(i, 3)) for i in range(3)
    ]
    points = []
    for r in rational_roots(part):
        shifted = op - Matrix.identity(tau) * r
        power = Matrix.identity(tau)
        for _ in range(tau):
            power = power @ shifted
        eigenspace = nullspace(power)
        coords = [_restricted_trace(c, eigenspace) / len(eigenspace) for c in coordinate_ops]
        pt = _normalize_point(coords)
        if any(g.evaluate(pt) != 0 for g in grad):
            raise InternalInconsistencyError(f"located point {pt} is not singular")
        mult, directions = _local_germ(f, pt)
        points.append(SingularPoint(pt, mult, directions, len(eigenspace)))
    points.sort(key=lambda p: p.coordinates, reverse=True)
    return mults, tuple(points)


def singular_data(f: HomPolynomial) -> SingularData:
    _check_cubic(f)
    rep = gcd_partials(f).degree
    if rep > 0:
        return SingularData(False, min(rep, 2), "infinite")
    taus, points = _reduced_singularities(f)
    return SingularData(True, 0, len(taus), taus, points)


def classify(f: HomPolynomial) -> CurveType:
    """Projective type of a nonzero plane cubic with rational coefficients."""
    return classify_from_data(f, singular_data(f))


def classify_from_data(f: HomPolynomial, data: SingularData) -> CurveType:
    if not data.reduced:
        _, factors = factor_squarefree(f)
        shape = sorted((p.degree, m) for p, m in factors)
        if data.repeated_factor_degree == 2 and shape == [(1, 3)]:
            return CurveType.TRIPLE_LINE
        if data.repeated_factor_degree == 1 and shape == [(1, 1), (1, 2)]:
            return CurveType.DOUBLE_LINE_PLUS_LINE
        raise InternalInconsistencyError(f"unexpected non-reduced factorisation {shape}")

    try:
        kind = _BY_TJURINA[data.tjurina_numbers]
    except KeyError:
        raise InternalInconsistencyError(
            f"no reduced cubic has local Tjurina numbers {data.tjurina_numbers}"
        ) from None
    expected = _SINGLE_POINT_GERMS.get(kind)
    if expected is not None:
        if len(data.rational_singular_points) != 1:
            raise InternalInconsistencyError("a unique singular point must be rational")
        pt = data.rational_singular_points[0]
        if (pt.multiplicity, pt.tangent_directions) != expected:
            raise InternalInconsistencyError(
                f"{kind.value}: germ (multiplicity {pt.multiplicity}, "
                f"{pt.tangent_directions} tangents) contradicts Tjurina number {pt.tjurina}"
            )
    return kind
