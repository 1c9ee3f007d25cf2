from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicpoisson.linalg import InconsistentSystemError, Matrix, charpoly, nullspace, rank, rref, solve
from oracles import to_sympy_matrix

F = Fraction


def test_rref_rank_one():
    reduced, pivots = rref(Matrix([[2, 4], [1, 2]]))
    assert reduced == Matrix([[1, 2], [0, 0]])
    assert pivots == [0]


def test_rref_identity():
    reduced, pivots = rref(Matrix.identity(3))
    assert reduced == Matrix.identity(3)
    assert pivots == [0, 1, 2]


def test_rref_fractions():
    reduced, pivots = rref(Matrix([[1, F(1, 2)], [F(1, 3), F(1, 6)]]))
    assert reduced == Matrix([[1, F(1, 2)], [0, 0]])
    assert pivots == [0]


def test_nullspace_examples():
    assert nullspace(Matrix.identity(2)) == []
    assert len(nullspace(Matrix.zeros(2, 3))) == 3
    assert nullspace(Matrix([[1, 1, 0], [0, 0, 1]])) == [(F(-1), F(1), F(0))]


def test_rank_examples():
    assert rank(Matrix.zeros(3, 4)) == 0
    assert rank(Matrix.identity(5)) == 5
    assert rank(Matrix([[1, 2], [2, 4]])) == 1


def test_solve_examples():
    b = (F(3), F(-1, 2), F(7))
    assert solve(Matrix.identity(3), b) == b
    assert solve(Matrix([[1, 1]]), [2]) == (F(2), F(0))
    with pytest.raises(InconsistentSystemError):
        solve(Matrix([[1], [1]]), [0, 1])


def test_solve_length_mismatch():
    with pytest.raises(ValueError):
        solve(Matrix.identity(2), [1, 2, 3])


def test_floats_rejected():
    with pytest.raises(TypeError):
        Matrix([[0.5]])


def test_det_and_inverse():
    m = Matrix([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
    assert m.det() == 18
    assert m @ m.inverse() == Matrix.identity(3)
    with pytest.raises(ZeroDivisionError):
        Matrix([[1, 2], [2, 4]]).inverse()


def test_charpoly_matches_sympy():
    m = Matrix([[1, 2, 0], [F(1, 2), -1, 3], [0, 4, 2]])
    x = sp.Symbol("x")
    expected = sp.Poly(to_sympy_matrix(m).charpoly(x).as_expr(), x).all_coeffs()[::-1]
    assert charpoly(m) == [F(str(c)) for c in expected]


small = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    # bias towards rank deficiency by copying rows
    rows = [draw(st.lists(small, min_size=c, max_size=c)) for _ in range(r)]
    if r > 1 and draw(st.booleans()):
        k = draw(st.sampled_from([F(1), F(-2), F(1, 3)]))
        rows[-1] = [k * x for x in rows[0]]
    return Matrix(rows, c)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_agrees_with_sympy(m):
    reduced, pivots = rref(m)
    ref, ref_pivots = to_sympy_matrix(m).rref()
    assert to_sympy_matrix(reduced) == ref
    assert tuple(pivots) == ref_pivots


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_linear_algebra_invariants(m):
    reduced, _ = rref(m)
    assert rref(reduced)[0] == reduced
    assert rank(m) == rank(m.transpose())
    kernel = nullspace(m)
    assert len(kernel) + rank(m) == m.ncols
    for v in kernel:
        assert all(x == 0 for x in m @ v)
    # rref rows span the same row space as m
    stacked = Matrix(list(m.rows) + list(reduced.rows), m.ncols)
    assert rank(stacked) == rank(m) == rank(reduced)


@settings(max_examples=100, deadline=None)
@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve_returns_exact_solution(m, x):
    b = m @ x[: m.ncols]
    sol = solve(m, b)
    assert m @ sol == b
