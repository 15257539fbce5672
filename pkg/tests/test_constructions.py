from fractions import Fraction

import pytest
import sympy

from shortsl2 import fixtures as fx
from shortsl2.algebras import AlgebraTable, check_lie
from shortsl2.constructions import (QuotientFromModule, bs_module_input, bs_quotient,
                                    quotient_from_module, rs_relations, tag, tag_on_morphism, tkk)
from shortsl2.exactlin import Matrix, rank
from shortsl2.report import CheckFailed
from shortsl2.superspace import SuperSpace

SEEDS = sorted(fx.SEEDS)


def killing_rank(g):
    n = g.dim
    ads = [g.ad_basis(i) for i in range(n)]
    K = sympy.Matrix(n, n, lambda i, j: sum((ads[i] @ ads[j])[k, k] for k in range(n)))
    return K.rank()


def test_tkk_heisenberg_is_abelian_plane():
    T = tkk(fx.heisenberg_seed())
    assert T.dim == 2 and not T.table.table


def test_tkk_sl3_is_semisimple_of_dim_8():
    T = tkk(fx.sl3_seed())
    assert T.dim == 8 and check_lie(T.table).ok
    assert killing_rank(T.table) == 8


def test_tkk_osp_dims():
    T = tkk(fx.osp_seed())
    assert T.table.space.sdim == (3, 2)


def test_rs_relations_examples():
    d = fx.sl3_seed()
    R = rs_relations(d)
    bs = bs_quotient(d)
    T = bs.ambient
    labels = T.space.labels
    for t in ("a⊗a", "m1⊗m1", "m2⊗m2"):
        e = [0] * T.dim
        e[labels.index(t)] = 1
        assert R.contains(e)
    assert bs.dim == 1
    assert rs_relations(fx.osp_seed()).dim == bs_quotient(fx.osp_seed()).ambient.dim
    assert rs_relations(fx.heisenberg_seed()).dim == 0


def test_bs_quotient_examples():
    bs = bs_quotient(fx.sl3_seed())
    assert bs.dim == 1 and bs.innder.dim == 1 and rank(bs.phi) == 1
    h = bs_quotient(fx.heisenberg_seed())
    assert h.dim == 1 and h.innder.dim == 0 and h.space.labels == ("{m0⊗m0}",)
    assert bs_quotient(fx.osp_seed()).dim == 0


@pytest.mark.parametrize("name", SEEDS)
def test_two_routes_to_bs_agree(name):
    bs = bs_quotient(fx.SEEDS[name]())
    q = quotient_from_module(bs_module_input(bs))
    assert q.A.dim == 0
    assert q.table == bs.table
    assert q.report.ok


def test_quotient_from_module_trivial_and_adjoint():
    g = AlgebraTable(SuperSpace(("x", "y"), (0, 0)), {}, "bracket")
    M = SuperSpace(("u", "v"), (0, 0))
    q = quotient_from_module(QuotientFromModule(M, g, [Matrix.zeros(2, 2)] * 2, Matrix.zeros(2, 2)))
    assert q.A.dim == 0 and q.table.dim == 2 and not q.table.table
    sl2, _ = fx.sl2()
    ad = [sl2.ad_basis(i) for i in range(3)]
    q = quotient_from_module(QuotientFromModule(sl2.space, sl2, ad, Matrix.identity(3)))
    assert q.A.dim == 0 and q.table == sl2 and q.report.ok


def test_quotient_from_module_rejects_non_equivariant_lambda():
    sl2, _ = fx.sl2()
    ad = [sl2.ad_basis(i) for i in range(3)]
    lam = Matrix.diag([1, 0, 0])
    with pytest.raises(CheckFailed, match="not a module morphism"):
        quotient_from_module(QuotientFromModule(sl2.space, sl2, ad, lam))


def test_tag_heisenberg_is_h3():
    G = tag(fx.heisenberg_seed())
    assert G.dim == 3
    sp = G.table.space
    x, y, z = (sp.index(l) for l in ("e1⊗m0", "e2⊗m0", "{m0⊗m0}"))
    assert G.table.basis_product(x, y) == sp.basis_vector(z)
    assert G.table.basis_product(y, x) == tuple(-c for c in sp.basis_vector(z))
    assert not any(G.table.basis_product(z, x)) and not any(G.table.basis_product(z, y))


def test_tag_osp_dims():
    G = tag(fx.osp_seed())
    assert G.table.space.sdim == (3, 2) and G.dims[2] == 0


def test_tag_sl2v_keeps_central_class():
    # Rs does not kill {1m⊗1m}: no generator family produces it
    G = tag(fx.sl2v_seed())
    bs = G.dblock
    assert bs.dim == 1 and bs.innder.dim == 0 and G.dim == 6
    z = G.index_d(0)
    assert all(not any(G.table.basis_product(z, j)) for j in range(G.dim))


@pytest.mark.parametrize("name", SEEDS)
def test_dimension_formulas(name):
    d = fx.SEEDS[name]()
    T, G = tkk(d), tag(d)
    assert T.dim == 3 * d.nJ + 2 * d.nM + T.dblock.dim
    assert G.dim == 3 * d.nJ + 2 * d.nM + G.dblock.dim
    assert check_lie(T.table).ok and check_lie(G.table).ok


@pytest.mark.parametrize("name", SEEDS)
def test_phi_kernel_is_central_in_d_block(name):
    bs = bs_quotient(fx.SEEDS[name]())
    assert bs.report.get("kernel-central").ok
    assert bs.report.get("phi-surjective").ok


def test_negative_seeds_are_refused():
    for fn in fx.NEGATIVE_SEEDS.values():
        for build in (tkk, tag, bs_quotient):
            with pytest.raises(CheckFailed):
                build(fn())


def test_tag_on_identity_morphism():
    d = fx.sl3_seed()
    gm, rep = tag_on_morphism(Matrix.identity(1), Matrix.identity(2), d, d)
    assert rep.ok and gm.matrix == Matrix.identity(tag(d).dim)


def test_tag_on_zero_morphism_from_zero_ops():
    src = fx.heisenberg_seed()
    dst = fx.heisenberg_seed()
    gm, rep = tag_on_morphism(Matrix(0, 0, []), Matrix.zeros(1, 1), src, dst)
    assert rep.ok and gm.matrix.is_zero()


def test_tag_on_embedding_into_sl3_data():
    src, dst = fx.a_only_seed(), fx.sl3_seed()
    gm, rep = tag_on_morphism(Matrix.identity(1), Matrix(2, 0, [[], []]), src, dst)
    assert rep.ok and rank(gm.matrix) == 3


def test_tag_on_morphism_names_failing_axiom():
    d = fx.sl3_seed()
    with pytest.raises(CheckFailed, match="eta-bullet|eta-star"):
        tag_on_morphism(Matrix.identity(1), Matrix.diag([1, 2]), d, d)


def test_scaled_m_gives_isomorphic_tag():
    # η2 = 2 id is an isomorphism onto the data with ⋆ scaled by 1/4
    src = fx.sl3_seed()
    dst = fx._data(fx.one_dim_jordan("a"), ("m1", "m2"), (0, 0),
                   bullet={("a", "m1"): {"m1": 1}, ("a", "m2"): {"m2": 1}},
                   star={("m1", "m2"): {"a": Fraction(1, 4)}, ("m2", "m1"): {"a": Fraction(-1, 4)}},
                   triple={("m1", "m2", "m1"): {"m1": Fraction(1, 2)},
                           ("m1", "m2", "m2"): {"m2": Fraction(-1, 4)},
                           ("m2", "m1", "m1"): {"m1": Fraction(1, 4)},
                           ("m2", "m1", "m2"): {"m2": Fraction(-1, 2)}})
    gm, rep = tag_on_morphism(Matrix.identity(1), Matrix.diag([2, 2]), src, dst)
    assert rep.ok and rank(gm.matrix) == 8
