from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from shortsl2.exactlin import (Matrix, Subspace, eigenspace, format_scalar, kernel,
                               quotient_complement, rank, rref, solve, to_scalar)

small = st.integers(min_value=-4, max_value=4)


def matrices(max_rows=5, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rref_examples():
    m, piv = rref(Matrix(2, 2, [[2, 4], [1, 2]]))
    assert m == Matrix(1, 2, [[1, 2]]) and piv == [0]
    m, piv = rref(Matrix.identity(3))
    assert m == Matrix.identity(3) and piv == [0, 1, 2]
    m, piv = rref(Matrix(2, 2, [[1, 1], [1, -1]]))
    assert m == Matrix.identity(2) and piv == [0, 1]


def test_kernel_examples():
    assert kernel(Matrix.zeros(2, 2)) == Subspace.full(2)
    assert kernel(Matrix.identity(3)).dim == 0
    k = kernel(Matrix(1, 2, [[1, 1]]))
    assert k.vectors() == [(1, -1)]


def test_quotient_complement_examples():
    reps, P = quotient_complement(Subspace.zero(2))
    assert reps == [0, 1] and P == Matrix.identity(2)
    reps, P = quotient_complement(Subspace.span([(1, 1)], 2))
    assert reps == [1] and P == Matrix(1, 2, [[-1, 1]])
    reps, P = quotient_complement(Subspace.full(3))
    assert reps == [] and P.rows == 0 and P.cols == 3


def test_eigenspace_examples():
    d = Matrix.diag([2, 1, 0])
    assert eigenspace(d, 2).vectors() == [(1, 0, 0)]
    assert eigenspace(d, 3).dim == 0
    adh = Matrix(3, 3, [[2, 0, 0], [0, 0, 0], [0, 0, -2]])  # basis (e, h, f)
    assert eigenspace(adh, 2).vectors() == [(1, 0, 0)]
    with pytest.raises(ValueError):
        eigenspace(Matrix.zeros(2, 3), 0)


def test_scalars_parse_exactly():
    assert to_scalar("3/2") == Fraction(3, 2)
    assert to_scalar(-4) == Fraction(-4)
    assert format_scalar(Fraction(-1, 2)) == "-1/2"
    with pytest.raises(TypeError):
        to_scalar(True)
    with pytest.raises(TypeError):
        to_scalar(0.5)
    with pytest.raises(ValueError):
        to_scalar("x/2")


def test_solve():
    m = Matrix(2, 2, [[1, 2], [3, 4]])
    x = solve(m, (5, 6))
    assert m.apply(x) == (5, 6)
    assert solve(Matrix(2, 1, [[1], [1]]), (1, 2)) is None


@given(matrices())
def test_rref_agrees_with_sympy(rows):
    ours, piv = rref(Matrix.from_rows(rows))
    ref, spiv = sympy.Matrix(rows).rref()
    nz = [tuple(Fraction(int(x.p), int(x.q)) for x in ref.row(i)) for i in range(len(spiv))]
    assert list(piv) == list(spiv)
    assert list(ours.data) == nz


@given(matrices())
def test_rref_idempotent_and_rank_nullity(rows):
    m = Matrix.from_rows(rows)
    r, piv = rref(m)
    r2, piv2 = rref(r)
    assert r2 == r and piv2 == piv
    assert kernel(m).dim + rank(m) == m.cols


@given(matrices())
def test_kernel_matches_sympy_nullspace(rows):
    m = Matrix.from_rows(rows)
    k = kernel(m)
    assert k.dim == len(sympy.Matrix(rows).nullspace())
    for v in k.vectors():
        assert not any(m.apply(v))


@given(matrices(max_rows=4, max_cols=6))
def test_projection_kills_relations(rows):
    R = Subspace.span(rows, len(rows[0]))
    reps, P = quotient_complement(R)
    n = R.ambient_dim
    assert len(reps) == n - R.dim
    for v in R.vectors():
        assert not any(P.apply(v)) if reps else True
    for i, r in enumerate(reps):
        e = [0] * n
        e[r] = 1
        assert P.apply(e) == tuple(Fraction(int(k == i)) for k in range(len(reps)))


@given(matrices(max_rows=3, max_cols=4), matrices(max_rows=3, max_cols=4))
def test_intersection_and_sum_dimensions(a, b):
    n = min(len(a[0]), len(b[0]))
    U = Subspace.span([r[:n] for r in a], n)
    W = Subspace.span([r[:n] for r in b], n)
    assert U.sum(W).dim + U.intersect(W).dim == U.dim + W.dim
    assert U.intersect(W).is_subspace_of(U) and U.intersect(W).is_subspace_of(W)
