from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from shortsl2 import fixtures as fx
from shortsl2.algebras import AlgebraTable, Sl2Data
from shortsl2.constructions import tag
from shortsl2.exactlin import Matrix, solve
from shortsl2.report import CheckFailed
from shortsl2.shortdec import (NotShort, decompose, extract_ternary, phi_map, roundtrip_check,
                               verify_short_structure)

SEEDS = sorted(fx.SEEDS)


def sl3_ops():
    g, s = fx.sl3()
    dec = decompose(g, s)
    return dec, extract_ternary(dec, ["a"], ["m1", "m2"])


def test_decompose_sl3():
    g, s = fx.sl3()
    dec = decompose(g, s)
    assert dec.dims == (1, 2, 1)
    assert dec.labels(dec.J_space) == ("E12",)
    assert dec.labels(dec.M_space) == ("E13", "E32")
    h12, h23 = g.space.index("H12"), g.space.index("H23")
    (dv,) = dec.D_space.vectors()
    assert dv[h12] == 1 and dv[h23] == 2


def test_decompose_sl2_adjoint():
    g, s = fx.sl2()
    assert decompose(g, s).dims == (1, 0, 0)


def test_decompose_rejects_weight_three():
    g, s = fx.sl2_plus_v3()
    with pytest.raises(NotShort, match="eigenvalue 3"):
        decompose(g, s)


def test_decompose_rejects_non_lie_and_bad_triples():
    g, s = fx.broken_sl3()
    with pytest.raises(CheckFailed, match="not a Lie superalgebra"):
        decompose(g, s)
    g, s = fx.sl3()
    swapped = Sl2Data(s.space, s.F, s.E, s.H)
    with pytest.raises(CheckFailed, match="not an sl2 action"):
        decompose(g, swapped)


def test_extract_sl3_tables():
    _, ops = sl3_ops()
    d = ops.data
    a, m1, m2 = (1,), (1, 0), (0, 1)
    assert d.dot(a, a) == (1,)
    assert d.bul(a, m1) == m1 and d.bul(a, m2) == m2
    assert d.st(m1, m2) == (1,) and d.st(m2, m1) == (-1,)
    assert d.tri(m1, m2, m1) == (2, 0)
    assert d.tri(m1, m2, m2) == (0, -1)
    assert d.tri(m2, m1, m1) == (1, 0)
    assert d.tri(m2, m1, m2) == (0, -2)
    assert d == fx.sl3_seed()


def test_extract_h3_from_tag_layout():
    G = tag(fx.heisenberg_seed())
    dec = decompose(G.table, G.sl2)
    ops = extract_ternary(dec)
    assert dec.dims == (0, 1, 1) and ops.data.is_trivial_ops()


def test_weight_three_brackets_vanish_and_bullet_forms_agree():
    dec, ops = sl3_ops()
    rep = verify_short_structure(dec, ops)
    assert rep.get("weight-three").ok and rep.get("bullet-two-forms").ok


def test_verify_sl3_passes_everything():
    dec, ops = sl3_ops()
    rep = verify_short_structure(dec, ops)
    assert rep.ok, rep.failing()


def test_verify_names_identity_when_jacobi_is_forced():
    g, s = fx.broken_sl3()
    dec = decompose(g, s, force=True)
    assert "super-jacobi" in dec.report.failing()
    rep = verify_short_structure(dec, extract_ternary(dec))
    assert "dictionary" in rep.failing() and "partial-on-M" in rep.failing()


@pytest.mark.parametrize("name", SEEDS)
def test_verify_on_tag_of_seed(name):
    G = tag(fx.SEEDS[name]())
    dec = decompose(G.table, G.sl2)
    assert verify_short_structure(dec, extract_ternary(dec)).ok


@pytest.mark.parametrize("name", SEEDS)
def test_roundtrip(name):
    assert roundtrip_check(fx.SEEDS[name]()).ok


def test_roundtrip_osp_keeps_half():
    G = tag(fx.osp_seed())
    ops = extract_ternary(decompose(G.table, G.sl2))
    assert ops.data.tri((1,), (1,), (1,)) == (Fraction(1, 2),)


@pytest.mark.parametrize("name,bij", [("sl3", True), ("sl2", True), ("osp12", True),
                                      ("sl2_ltimes_V", False)])
def test_phi_map(name, bij):
    g, s = fx.LIE[name]()
    G, phi, rep = phi_map(g, s)
    assert rep.ok, rep.failing()
    assert ("injective=True" in rep.get("phi-rank").note) == bij
    assert "surjective=True" in rep.get("phi-rank").note


def test_phi_on_tag_of_osp_is_bijective():
    G0 = tag(fx.osp_seed())
    G, phi, rep = phi_map(G0.table, G0.sl2)
    assert rep.ok and G.dim == G0.dim == 5
    assert "injective=True" in rep.get("phi-rank").note


def conjugate(g: AlgebraTable, s: Sl2Data, P: Matrix):
    """Transport g and its sl2 action along the basis change P (columns = new basis)."""
    n = g.dim
    Pinv = Matrix.from_columns([solve(P, [int(i == j) for i in range(n)]) for j in range(n)], n)
    table = {}
    for i, j in product(range(n), repeat=2):
        v = Pinv.apply(g.mul(P.col(i), P.col(j)))
        terms = [(k, c) for k, c in enumerate(v) if c]
        if terms:
            table[(i, j)] = terms
    h = AlgebraTable(g.space, table, "bracket")
    return h, Sl2Data(g.space, Pinv @ s.E @ P, Pinv @ s.F @ P, Pinv @ s.H @ P)


@st.composite
def unitriangular(draw, n):
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = Fraction(draw(st.integers(-2, 2)))
    return Matrix(n, n, rows)


@settings(max_examples=15)
@given(unitriangular(8))
def test_sl3_under_basis_change(P):
    g, s = fx.sl3()
    h, t = conjugate(g, s, P)
    dec = decompose(h, t)
    assert dec.dims == (1, 2, 1)
    ops = extract_ternary(dec)
    assert verify_short_structure(dec, ops).ok
    G, phi, rep = phi_map(h, t)
    assert rep.ok and "injective=True" in rep.get("phi-rank").note
