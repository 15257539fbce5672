from fractions import Fraction

import pytest

from shortsl2 import fixtures as fx
from shortsl2.exactlin import Matrix
from shortsl2.jternary import (check_angle_partial_compat, check_bracket_closure,
                               check_derivation_laws, check_jternary, check_operator_symmetry,
                               check_trivial_ops_symmetry, innder_basis, require_valid, validate)
from shortsl2.report import CheckFailed

SEEDS = sorted(fx.SEEDS)


@pytest.mark.parametrize("name", SEEDS)
def test_seeds_are_valid(name):
    assert validate(fx.SEEDS[name]()).ok


@pytest.mark.parametrize("name", SEEDS)
def test_inner_operator_laws(name):
    d = fx.SEEDS[name]()
    for rep in (check_derivation_laws(d), check_bracket_closure(d),
                check_angle_partial_compat(d), check_operator_symmetry(d)):
        assert rep.ok, rep.failing()


def test_sl3_partial_m1_m2():
    d = fx.sl3_seed()
    half = Fraction(3, 2)
    assert d.partial_basis(0, 1) == Matrix.diag([0, -half, half])
    assert d.partial_basis(1, 0) == d.partial_basis(0, 1)


def test_innder_dims():
    dims = {name: innder_basis(fx.SEEDS[name]()).dim for name in SEEDS}
    assert dims["sl3"] == 1 and dims["osp"] == 0 and dims["heisenberg"] == 0
    assert dims["sl2V"] == 0 and dims["a_only"] == 0


def test_broken_sl3_ternary_fails_sjt():
    rep = check_jternary(fx.broken_sl3_seed())
    assert set(rep.failing()) == {"SJT4", "SJT5", "SJT6"}
    with pytest.raises(CheckFailed):
        require_valid(fx.broken_sl3_seed())


def test_broken_module_fails_special_module_only():
    assert validate(fx.broken_module_seed()).failing() == ["special-supermodule"]


def test_trivial_ops_symmetry_and_sjt6():
    assert check_trivial_ops_symmetry(fx.trivial_triple_seed(0)).ok
    rep = check_trivial_ops_symmetry(fx.trivial_triple_seed(1))
    assert rep.failing() == ["SJT6"]
    assert rep.get("triple-symmetry-12").ok and rep.get("triple-symmetry-23").ok
    with pytest.raises(ValueError):
        check_trivial_ops_symmetry(fx.sl3_seed())


def test_violations_name_the_tuple():
    rep = check_jternary(fx.broken_sl3_seed())
    v = rep.get("SJT4").violations[0]
    assert len(v.tuple) == 3 and v.residual
