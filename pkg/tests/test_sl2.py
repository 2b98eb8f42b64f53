from fractions import Fraction

import pytest

from liecoh.core.exceptions import NotAModule, NotWeightDiagonalizable
from liecoh.core.linalg import SparseMatrix
from liecoh.models.lie import Representation
from liecoh.models.weights import Sl2Decomposition, WeightMultiset
from liecoh.services.lie import exterior_power, semidirect_product
from liecoh.services.sl2 import (
    clebsch_gordan,
    decompose,
    decompose_representation,
    hom_dim,
    invariant_bilinear_forms,
    irrep,
    is_sl2,
    sl2,
    sl2_module,
    symplectic_form,
    weight_multiplicities,
)


def test_weights_of_irreducibles():
    assert weight_multiplicities(irrep(3)) == WeightMultiset({3: 1, 1: 1, -1: 1, -3: 1})
    assert weight_multiplicities(sl2_module(1, 1)) == WeightMultiset({1: 2, -1: 2})
    assert weight_multiplicities(exterior_power(irrep(3), 2)) == WeightMultiset({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})


def test_weights_of_a_non_diagonal_basis():
    # V_1 in the basis v_0 + v_1, v_1: e3 is no longer diagonal
    P = SparseMatrix.from_dense([[1, 0], [1, 1]])
    P_inv = SparseMatrix.from_dense([[1, 0], [-1, 1]])
    rho = irrep(1)
    conjugated = Representation(sl2(), 2, tuple(P_inv @ A @ P for A in rho.actions))
    assert weight_multiplicities(conjugated) == WeightMultiset({1: 1, -1: 1})


def test_nilpotent_weight_operator_is_rejected():
    zero = SparseMatrix.zeros(2, 2)
    rho = Representation(sl2(), 2, (zero, zero, SparseMatrix(2, 2, {(0, 1): 1})))
    with pytest.raises(NotWeightDiagonalizable):
        weight_multiplicities(rho)


def test_decompose():
    assert decompose(WeightMultiset({2: 1, 0: 1, -2: 1})) == Sl2Decomposition.of(2)
    assert decompose(WeightMultiset({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})) == Sl2Decomposition.of(4, 0)
    assert decompose(WeightMultiset({0: 3})) == Sl2Decomposition({0: 3})
    assert decompose_representation(sl2_module(1, 3, 3)) == Sl2Decomposition.of(1, 3, 3)


def test_decompose_rejects_non_characters():
    with pytest.raises(NotAModule):
        decompose(WeightMultiset({1: 1}))
    with pytest.raises(NotAModule):
        decompose(WeightMultiset({2: 2, 0: 1, -2: 2}))


def test_decomposition_text():
    d = Sl2Decomposition.parse("V_0+2V_4")
    assert d == Sl2Decomposition.of(0, 4, 4)
    assert d.dim == 11
    assert str(d) == "V_0+2V_4"
    assert str(Sl2Decomposition()) == "0"
    assert Sl2Decomposition.parse("V_0 ⊕ V_{12}") == Sl2Decomposition.of(0, 12)


def test_clebsch_gordan():
    assert clebsch_gordan(1, 1) == Sl2Decomposition.of(2, 0)
    assert clebsch_gordan(4, 0) == Sl2Decomposition.of(4)
    assert clebsch_gordan(2, 1) == Sl2Decomposition.of(3, 1)
    assert str(clebsch_gordan(2, 3)) == "V_1+V_3+V_5"


def test_hom_dim():
    assert hom_dim(Sl2Decomposition.of(2, 2, 0), Sl2Decomposition.of(2, 4)) == 2
    assert hom_dim(Sl2Decomposition.of(1), Sl2Decomposition.of(3)) == 0


@pytest.mark.parametrize("m,count", [(1, 1), (2, 0), (3, 1), (4, 0), (5, 1)])
def test_invariant_antisymmetric_forms(m, count):
    assert len(invariant_bilinear_forms(irrep(m), "antisymmetric")) == count


def test_invariant_symmetric_forms():
    assert len(invariant_bilinear_forms(irrep(2), "symmetric")) == 1
    assert len(invariant_bilinear_forms(irrep(1), "symmetric")) == 0


def test_symplectic_form():
    omega = symplectic_form(3)
    assert omega[(0, 3)] == 1
    assert omega.T == -omega
    for A in irrep(3).actions:
        assert (A.T @ omega + omega @ A).is_zero()
    with pytest.raises(ValueError):
        symplectic_form(2)


def test_is_sl2():
    assert is_sl2(sl2())
    assert not is_sl2(semidirect_product(sl2(), irrep(1)))
    assert sl2().construction.radical.dim == 0


def test_irrep_conventions():
    rho = irrep(2)
    e1, e2, e3 = rho.actions
    assert e1[(0, 1)] == 1 and e1[(1, 2)] == 2
    assert e2[(1, 0)] == 2 and e2[(2, 1)] == 1
    assert [e3[(i, i)] for i in range(3)] == [Fraction(2), Fraction(0), Fraction(-2)]
    with pytest.raises(ValueError):
        irrep(-1)
