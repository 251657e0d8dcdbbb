from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tiltlab.linalg import (
    Matrix,
    column_space,
    hstack,
    image_complement_change_of_basis,
    kernel_basis,
    rank,
    rref,
    solve,
    vstack,
)


def naive_rank(rows):
    """Plain Fraction Gauss elimination, written independently of the library."""
    a = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


entries = st.one_of(
    st.integers(-6, 6),
    st.fractions(min_value=-5, max_value=5, max_denominator=7),
)


@st.composite
def matrices(draw, max_dim=6):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    rows = [[draw(entries) for _ in range(c)] for _ in range(r)]
    return Matrix.from_rows(rows, cols=c)


@st.composite
def low_rank(draw):
    """Products of thin factors, so rank deficiency is common."""
    k = draw(st.integers(0, 3))
    r = draw(st.integers(1, 6))
    c = draw(st.integers(1, 6))
    a = Matrix.from_rows([[draw(st.integers(-4, 4)) for _ in range(k)] for _ in range(r)], cols=k)
    b = Matrix.from_rows([[draw(st.integers(-4, 4)) for _ in range(c)] for _ in range(k)], cols=c)
    return a @ b


# -- worked examples ---------------------------------------------------------


def test_rank_examples():
    assert rank(Matrix.identity(2)) == 2
    assert rank(Matrix.zeros(0, 5)) == 0
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(3)).shape == (3, 0)
    k = kernel_basis(Matrix.from_rows([[1, -1]]))
    assert k.shape == (2, 1) and k[0, 0] == k[1, 0] != 0
    m = Matrix.from_rows([[1, 2], [2, 4]])
    k = kernel_basis(m)
    assert k.shape == (2, 1)
    assert k[0, 0] == -2 * k[1, 0]
    assert (m @ k).is_zero()


def test_solve_examples():
    b = Matrix.from_rows([[3], [-7]])
    assert solve(Matrix.identity(2), b) == b
    assert solve(Matrix.zeros(2, 2), b) is None
    m = Matrix.from_rows([[1, 1]])
    x = solve(m, Matrix.from_rows([[2]]))
    assert x is not None and x[0, 0] + x[1, 0] == 2


def test_solve_shape_mismatch():
    with pytest.raises(ValueError):
        solve(Matrix.identity(2), Matrix.zeros(3, 1))


def test_complement_examples():
    proj, incl = image_complement_change_of_basis(Matrix.identity(3), 3)
    assert proj.shape == (0, 3)
    proj, incl = image_complement_change_of_basis(Matrix.zeros(2, 0), 2)
    assert proj == Matrix.identity(2)
    proj, incl = image_complement_change_of_basis(Matrix.from_rows([[1], [0]]), 2)
    assert proj.shape == (1, 2)
    assert (proj @ Matrix.from_rows([[1], [0]])).is_zero()
    assert proj @ incl == Matrix.identity(1)


def test_empty_shapes_are_zero_maps():
    z = Matrix.zeros(3, 0)
    assert (z @ Matrix.zeros(0, 2)) == Matrix.zeros(3, 2)
    assert rank(z) == 0
    assert kernel_basis(Matrix.zeros(0, 4)) == Matrix.identity(4)
    assert column_space(z).shape == (3, 0)


def test_entries_are_normalised_fractions():
    m = Matrix.from_rows([[Fraction(2, 4), -3], [Fraction(6, -8), 0]])
    assert m[0, 0] == Fraction(1, 2) and m[0, 0].denominator == 2
    assert m[1, 0].denominator > 0


def test_bad_shapes_rejected():
    with pytest.raises(ValueError):
        Matrix(2, 2, (Fraction(1),))
    with pytest.raises(ValueError):
        Matrix.from_rows([[1, 2], [3]])
    with pytest.raises(ValueError):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(ValueError):
        hstack([Matrix.zeros(1, 1), Matrix.zeros(2, 1)])
    with pytest.raises(ValueError):
        vstack([Matrix.zeros(1, 1), Matrix.zeros(1, 2)])


# -- properties ------------------------------------------------------------------


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).cols == m.cols


@settings(max_examples=150, deadline=None)
@given(st.one_of(matrices(), low_rank()))
def test_kernel_is_annihilated_and_independent(m):
    k = kernel_basis(m)
    assert (m @ k).is_zero()
    assert rank(k) == k.cols


@settings(max_examples=200, deadline=None)
@given(st.one_of(matrices(), low_rank()))
def test_rank_agrees_with_naive_elimination(m):
    assert rank(m) == naive_rank(m.to_rows())


@settings(max_examples=100, deadline=None)
@given(st.one_of(matrices(), low_rank()))
def test_rref_is_reduced(m):
    red, pivots = rref(m)
    assert len(red) == len(pivots) == rank(m)
    for k, c in enumerate(pivots):
        assert red[k][c] == 1
        assert all(red[i][c] == 0 for i in range(len(red)) if i != k)
        assert all(x == 0 for x in red[k][:c])
    assert pivots == sorted(pivots)


@settings(max_examples=150, deadline=None)
@given(st.one_of(matrices(), low_rank()), st.data())
def test_solve_consistent_systems(m, data):
    x0 = Matrix.from_rows([[data.draw(st.integers(-3, 3))] for _ in range(m.cols)], cols=1)
    b = m @ x0
    x = solve(m, b)
    assert x is not None and m @ x == b


@settings(max_examples=100, deadline=None)
@given(low_rank())
def test_solve_detects_inconsistency(m):
    if rank(m) == m.rows:
        return
    # a vector outside the column space: pick one orthogonal to it
    left = kernel_basis(m.T)
    b = left.select_columns([0])
    assert solve(m, b) is None


@settings(max_examples=150, deadline=None)
@given(st.one_of(matrices(), low_rank()))
def test_complement_change_of_basis(m):
    proj, incl = image_complement_change_of_basis(m, m.rows)
    q = m.rows - rank(m)
    assert proj.shape == (q, m.rows) and incl.shape == (m.rows, q)
    assert (proj @ m).is_zero()
    assert proj @ incl == Matrix.identity(q)


@settings(max_examples=50, deadline=None)
@given(matrices())
def test_deterministic(m):
    copy = Matrix.from_rows(m.to_rows(), cols=m.cols)
    assert kernel_basis(m) == kernel_basis(copy)
    assert rref(m) == rref(copy)


def test_power_and_transpose():
    m = Matrix.from_rows([[0, 1], [0, 0]])
    assert m.power(2).is_zero()
    assert m.power(0) == Matrix.identity(2)
    assert m.T.T == m
    assert m.T == Matrix.from_rows([[0, 0], [1, 0]])
