from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, strategies as st

from shortsl2 import fixtures as fx
from shortsl2.algebras import (AlgebraTable, BilinearMap, check_derivation_action, check_lie,
                               check_sl2_relations, check_super_jordan,
                               check_super_jordan_via_brackets, jacobi_violations, sl2_fixtures)
from shortsl2.exactlin import Matrix
from shortsl2.superspace import SuperSpace, sign


def naive_jacobi(g):
    """Residuals computed straight from the definition, one triple at a time."""
    p = g.space.parities
    n = g.dim
    e = g.space.basis_vector
    out = {}
    for i, j, k in product(range(n), repeat=3):
        x, y, z = e(i), e(j), e(k)
        t1 = g.mul(g.mul(x, y), z)
        t2 = g.mul(g.mul(y, z), x)
        t3 = g.mul(g.mul(z, x), y)
        s2 = sign(p[i], p[j] + p[k])
        s3 = sign(p[k], p[i] + p[j])
        res = tuple(a + s2 * b + s3 * c for a, b, c in zip(t1, t2, t3))
        if any(res):
            out[(i, j, k)] = res
    return out


@pytest.mark.parametrize("name", sorted(fx.LIE))
def test_lie_fixtures_pass(name):
    g, s = fx.LIE[name]()
    assert check_lie(g).ok
    assert check_sl2_relations(s).ok
    assert check_derivation_action(g, {"E": s.E, "F": s.F, "H": s.H}).ok


def test_h3_and_sl2_plus_v3_are_lie():
    assert check_lie(fx.h3()).ok
    assert check_lie(fx.sl2_plus_v3()[0]).ok


def test_broken_sl3_fails_only_jacobi():
    g, _ = fx.broken_sl3()
    assert check_lie(g).failing() == ["super-jacobi"]


def test_sl3_matches_matrix_commutators_in_sympy():
    g, _ = fx.sl3()
    E = lambda i, j: sympy.Matrix(3, 3, lambda a, b: int((a, b) == (i - 1, j - 1)))
    mats = {"E12": E(1, 2), "E13": E(1, 3), "E23": E(2, 3), "H12": E(1, 1) - E(2, 2),
            "H23": E(2, 2) - E(3, 3), "E21": E(2, 1), "E31": E(3, 1), "E32": E(3, 2)}
    labels = g.space.labels
    for i, j in product(range(8), repeat=2):
        A, B = mats[labels[i]], mats[labels[j]]
        lhs = sum((c * mats[labels[k]] for k, c in enumerate(g.basis_product(i, j)) if c),
                  sympy.zeros(3, 3))
        assert lhs == A * B - B * A


@st.composite
def random_tables(draw):
    n = draw(st.integers(1, 4))
    par = tuple(draw(st.lists(st.integers(0, 1), min_size=n, max_size=n)))
    space = SuperSpace(tuple(f"x{i}" for i in range(n)), par)
    table = {}
    for i, j in product(range(n), repeat=2):
        ks = [k for k in range(n) if (par[i] + par[j] + par[k]) % 2 == 0]
        if ks and draw(st.booleans()):
            k = draw(st.sampled_from(ks))
            table[(i, j)] = [(k, Fraction(draw(st.integers(-3, 3)), draw(st.integers(1, 3))))]
    return AlgebraTable(space, table, "bracket")


@given(random_tables())
def test_jacobi_checker_matches_naive_oracle(g):
    ours = {(i, j, k): r for i, j, k, r in jacobi_violations(g)}
    assert ours == naive_jacobi(g)


def test_sl2_forms():
    sl2, forms, act = sl2_fixtures()
    # kappa(x, y) = 4 tr(xy) in the natural representation
    mats = [act[x] for x in ("e", "h", "f")]
    for i, j in product(range(3), repeat=2):
        tr = sum((mats[i] @ mats[j])[k, k] for k in range(2))
        assert forms.kappa[i, j] == 4 * tr
    assert forms.symmetrizer[(0, 1)] == (0, Fraction(-1, 2), 0)


JORDAN = {
    "lambda": fx.lambda_jordan,
    "one_dim": fx.one_dim_jordan,
    "broken": fx.broken_jordan,
    "empty": fx.empty_jordan,
}


@pytest.mark.parametrize("name", sorted(JORDAN))
def test_jordan_checkers_agree(name):
    j = JORDAN[name]()
    assert check_super_jordan(j).ok == check_super_jordan_via_brackets(j).ok
    assert check_super_jordan(j).ok == (name != "broken")


def test_lambda_is_jordan_but_not_associative_sign_free():
    j = fx.lambda_jordan()
    z, zs, w = (j.space.basis_vector(j.space.index(x)) for x in ("z", "zs", "w"))
    assert j.mul(zs, z) == w
    assert j.mul(z, zs) == tuple(-x for x in w)


def test_bilinear_map_rejects_parity_breaking_entries():
    V = SuperSpace(("x", "y"), (0, 1))
    with pytest.raises(ValueError):
        BilinearMap(V, V, V, {(0, 0): [(1, 1)]})
