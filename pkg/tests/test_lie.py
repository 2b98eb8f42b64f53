from fractions import Fraction

import pytest

from liecoh.core.exceptions import (
    DimensionMismatch,
    JacobiViolation,
    NotADerivation,
    NotAntisymmetric,
    NotInvariant,
    RepresentationMismatch,
    UnsupportedClass,
    UnsupportedRank,
)
from liecoh.core.linalg import SparseMatrix
from liecoh.models.lie import Representation
from liecoh.models.weights import Sl2Decomposition
from liecoh.services.lie import (
    abelian,
    adjoint_representation,
    center,
    check_homomorphism,
    derivations,
    derived_subalgebra,
    direct_sum,
    dual,
    exterior_power,
    extend_to_derivations,
    free_nilpotent,
    heisenberg_from_symplectic,
    is_derivation,
    is_nilpotent,
    is_perfect,
    outer_derivation_dim,
    quotient_module,
    semidirect_by_derivations,
    semidirect_product,
    _block_action,
    submodule,
    tensor_product,
    validate_lie_algebra,
)
from liecoh.services.sl2 import decompose_representation, irrep, sl2, sl2_module, symplectic_form


@pytest.fixture
def n3():
    return heisenberg_from_symplectic(irrep(1), symplectic_form(1), name="n_3")


def test_validate_one_based_dict_input_matches_sl2():
    g = validate_lie_algebra(3, {(1, 2): {3: 1}, (1, 3): {1: -2}, (2, 3): {2: 2}}, "sl2", one_based=True)
    assert g == sl2()


def test_validate_normalizes_reversed_pairs():
    g = validate_lie_algebra(2, {(2, 1): {1: 1}}, one_based=True)
    assert g.bracket(0, 1) == {0: Fraction(-1)}
    assert g.bracket(1, 0) == {0: Fraction(1)}


def test_validate_dense_vectors():
    g = validate_lie_algebra(3, {(0, 1): [0, 0, "1/2"]})
    assert g.structure_constant(0, 1, 2) == Fraction(1, 2)


def test_validate_rejects_duplicates_and_bad_lengths():
    with pytest.raises(DimensionMismatch):
        validate_lie_algebra(2, {(0, 1): {0: 1}, (1, 0): {0: 1}})
    with pytest.raises(DimensionMismatch):
        validate_lie_algebra(3, {(0, 1): [1, 0]})
    with pytest.raises(DimensionMismatch):
        validate_lie_algebra(2, {(0, 2): {0: 1}})


def test_jacobi_violation_reports_triple_and_defect():
    with pytest.raises(JacobiViolation) as info:
        validate_lie_algebra(3, {(0, 1): {0: 1}, (1, 2): {1: 1}})
    assert info.value.triple == (1, 2, 3)
    assert info.value.defect == (Fraction(1), Fraction(0), Fraction(0))
    assert len(info.value.violations) == 1


@pytest.mark.parametrize("m", range(6))
def test_irreps_are_representations(m):
    check_homomorphism(irrep(m))


def test_adjoint_is_a_representation():
    check_homomorphism(adjoint_representation(sl2()))
    check_homomorphism(adjoint_representation(semidirect_product(sl2(), irrep(2))))


def test_homomorphism_failure_reports_pair():
    zero = SparseMatrix.zeros(1, 1)
    bad = Representation(sl2(), 1, (zero, zero, SparseMatrix.identity(1)))
    with pytest.raises(RepresentationMismatch) as info:
        check_homomorphism(bad)
    assert info.value.pair == (1, 2)


def test_module_operations_decompose_as_expected():
    assert decompose_representation(tensor_product(irrep(1), irrep(1))) == Sl2Decomposition.of(2, 0)
    assert decompose_representation(tensor_product(irrep(2), irrep(1))) == Sl2Decomposition.of(3, 1)
    assert decompose_representation(dual(irrep(2))) == Sl2Decomposition.of(2)
    assert decompose_representation(exterior_power(irrep(3), 2)) == Sl2Decomposition.of(4, 0)
    check_homomorphism(exterior_power(irrep(3), 2))


def test_structure_queries():
    s = sl2()
    assert center(s) == []
    assert is_perfect(s)
    assert not is_nilpotent(s).nilpotent
    assert is_nilpotent(abelian(3)) == (True, 1)
    g = semidirect_product(s, irrep(1))
    assert g.dim == 5
    assert is_perfect(g)
    assert len(derived_subalgebra(g)) == 5


def test_sl2_v1_bracket_table():
    g = semidirect_product(sl2(), irrep(1))
    assert {(i, j): vec for i, j, vec in g.nonzero_brackets()} == {
        (0, 1): {2: 1},
        (0, 2): {0: -2},
        (1, 2): {1: 2},
        (0, 4): {3: 1},
        (1, 3): {4: 1},
        (2, 3): {3: 1},
        (2, 4): {4: -1},
    }


@pytest.mark.parametrize(
    "highest_weights,perfect",
    [((1,), True), ((1, 2), True), ((0,), False), ((1, 0), False), ((2, 0, 3), False)],
)
def test_semidirect_product_is_perfect_without_trivial_summands(highest_weights, perfect):
    assert is_perfect(semidirect_product(sl2(), sl2_module(*highest_weights))) is perfect


def test_heisenberg(n3):
    N, action = n3
    assert N.dim == 3
    assert N.bracket(0, 1) == {2: Fraction(1)}
    assert is_nilpotent(N) == (True, 2)
    assert len(center(N)) == 1
    for D in action.actions:
        assert is_derivation(N, D) is None


def test_heisenberg_rejects_bad_forms():
    with pytest.raises(NotAntisymmetric):
        heisenberg_from_symplectic(irrep(1), SparseMatrix.identity(2))
    omega = SparseMatrix(4, 4, {(0, 1): 1, (1, 0): -1})
    with pytest.raises(NotInvariant):
        heisenberg_from_symplectic(irrep(3), omega)


def test_derivations():
    assert len(derivations(sl2())) == 3
    assert outer_derivation_dim(sl2()) == 0
    assert len(derivations(abelian(2))) == 4


def test_heisenberg_derivations(n3):
    N, _ = n3
    basis = derivations(N)
    assert len(basis) == 6
    assert outer_derivation_dim(N) == 4
    assert all(is_derivation(N, D) is None for D in basis)


def test_semidirect_by_derivations(n3):
    N, action = n3
    g = semidirect_by_derivations(sl2(), N, action, name="sl2⋉n_3")
    assert g.dim == 6
    assert is_perfect(g)
    assert len(center(g)) == 1
    assert g.construction.radical_indices == (3, 4, 5)
    assert g.construction.radical == N


def test_semidirect_rejects_non_derivations(n3):
    N, _ = n3
    with pytest.raises(NotADerivation) as info:
        semidirect_by_derivations(sl2(), N, irrep(2))
    assert info.value.index == 1
    assert info.value.pair == (1, 2)


def test_direct_sum_combines_constructions():
    g = semidirect_product(sl2(), irrep(1))
    total = direct_sum(sl2(), g)
    assert total.dim == 8
    assert is_perfect(total)
    assert total.construction.levi.dim == 6
    assert total.construction.radical_indices == (6, 7)


def test_free_nilpotent():
    F, action = free_nilpotent(irrep(2), 2)
    assert F.dim == 6
    assert is_nilpotent(F) == (True, 2)
    F3, action3 = free_nilpotent(irrep(1), 3)
    assert F3.dim == 5
    assert is_nilpotent(F3) == (True, 3)
    for D in action.actions + action3.actions:
        assert is_derivation(F if D.rows == 6 else F3, D) is None
    check_homomorphism(action3)
    with pytest.raises(UnsupportedClass):
        free_nilpotent(irrep(1), 4)
    with pytest.raises(UnsupportedRank):
        free_nilpotent(irrep(2), 3)


def test_extend_to_derivations_needs_full_basis(n3):
    N, _ = n3
    with pytest.raises(DimensionMismatch):
        extend_to_derivations(N, irrep(1), {})


def test_submodule_and_quotient():
    rho = adjoint_representation(semidirect_product(sl2(), irrep(2)))
    radical = [3, 4, 5]
    assert submodule(rho, radical).dim == 3
    assert quotient_module(rho, radical).dim == 3
    with pytest.raises(RepresentationMismatch):
        submodule(rho, [0, 1, 2])


def test_block_actions_must_cover_the_levi_factor():
    with pytest.raises(DimensionMismatch):
        _block_action(6, [(0, irrep(1).actions)], 2)
    assert len(_block_action(3, [(0, irrep(1).actions)], 2)) == 3
