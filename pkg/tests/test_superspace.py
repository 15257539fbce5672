from fractions import Fraction

import pytest

from shortsl2.exactlin import Matrix
from shortsl2.superspace import (GradedMap, SuperSpace, TensorSquareSpace, compose_graded,
                                 koszul_sign, matrix_commutator, sign, super_commutator)


def test_signs():
    assert [sign(p, q) for p in (0, 1) for q in (0, 1)] == [1, 1, 1, -1]
    assert koszul_sign(1, 1) == Fraction(-1)


def test_superspace_basics():
    V = SuperSpace.from_pairs([("x", 0), ("y", 1), ("z", 1)])
    assert V.dim == 3 and V.sdim == (1, 2)
    assert V.index("y") == 1 and V.parity(2) == 1
    assert V.vector_parity((0, 1, 2)) == 1
    assert V.vector_parity((0, 0, 0)) is None
    with pytest.raises(ValueError):
        V.vector_parity((1, 1, 0))
    with pytest.raises(KeyError):
        V.index("w")
    with pytest.raises(ValueError):
        SuperSpace(("a", "a"), (0, 0))
    assert V.direct_sum(SuperSpace(("w",), (0,))).labels == ("x", "y", "z", "w")


def test_graded_map_parity_is_enforced():
    V = SuperSpace(("x", "y"), (0, 1))
    odd = Matrix(2, 2, [[0, 1], [1, 0]])
    assert GradedMap(V, V, odd, 1).parity == 1
    with pytest.raises(ValueError):
        GradedMap(V, V, odd, 0)
    assert GradedMap.infer(V, V, odd).parity == 1
    assert compose_graded(GradedMap(V, V, odd, 1), GradedMap(V, V, odd, 1)).parity == 0


def test_super_commutator_of_odd_maps_is_anticommutator():
    V = SuperSpace(("x", "y"), (0, 1))
    a = GradedMap(V, V, Matrix(2, 2, [[0, 1], [0, 0]]), 1)
    b = GradedMap(V, V, Matrix(2, 2, [[0, 0], [1, 0]]), 1)
    assert super_commutator(a, b).matrix == Matrix.identity(2)
    assert matrix_commutator(a.matrix, b.matrix, 1, 1) == Matrix.identity(2)


def test_tensor_square_labels_and_parities():
    V = SuperSpace(("x", "y"), (0, 1))
    T = TensorSquareSpace(V)
    assert T.space.labels == ("x⊗x", "x⊗y", "y⊗x", "y⊗y")
    assert T.space.parities == (0, 1, 1, 0)
    assert T.unflatten(T.flatten(1, 0)) == (1, 0)
