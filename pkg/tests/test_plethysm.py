from math import comb

import pytest
import sympy

from liecoh.config import settings
from liecoh.core.exceptions import GuardrailExceeded
from liecoh.models.weights import Sl2Decomposition
from liecoh.services.plethysm import (
    c_coefficients,
    exterior_power_decomposition,
    exterior_weights,
    gaussian_binomial,
    lambda3_self_multiplicity,
    lambda4_multiplicity,
    multiplicity_N,
    partition_count,
    restricted_partition_count,
)
from liecoh.services.sl2 import hom_dim

q = sympy.Symbol("q")


def _sympy_gaussian(j: int, k: int):
    n = j + k
    expr = sympy.Integer(1)
    for i in range(1, k + 1):
        expr *= (1 - q ** (n - k + i)) / (1 - q**i)
    poly = sympy.Poly(sympy.cancel(expr), q)
    return [int(c) for c in reversed(poly.all_coeffs())]


@pytest.mark.parametrize("j,k", [(1, 1), (2, 2), (3, 2), (2, 4), (4, 3), (5, 5)])
def test_gaussian_binomial_matches_sympy(j, k):
    assert list(gaussian_binomial(j, k).coefficients) == _sympy_gaussian(j, k)


def test_gaussian_binomial_examples():
    assert gaussian_binomial(2, 2).coefficients == (1, 1, 2, 1, 1)
    assert gaussian_binomial(3, 0).coefficients == (1,)


@pytest.mark.parametrize("j", range(13))
def test_gaussian_binomials_are_palindromic_and_unimodal(j):
    for k in range(13):
        poly = gaussian_binomial(j, k)
        assert len(poly.coefficients) == j * k + 1
        assert poly(1) == comb(j + k, k)
        assert poly.is_palindromic and poly.is_unimodal


def test_partition_count_bounds():
    assert partition_count(3, 3, -1) == 0
    assert partition_count(3, 3, 10) == 0
    assert partition_count(0, 5, 0) == 1
    assert partition_count(3, 5, 4) == 4
    assert partition_count(4, 3, 5) == 4


@pytest.mark.parametrize("j", range(11))
def test_partition_count_is_symmetric(j):
    for k in range(11):
        for n in range(-1, j * k + 2):
            assert partition_count(j, k, n) == partition_count(k, j, n)
            assert partition_count(j, k, n) == partition_count(j, k, j * k - n)


def test_c_coefficients():
    assert c_coefficients(6) == [1, 0, 1, 1, 2, 1, 3]
    assert c_coefficients(8) == [1, 0, 1, 1, 2, 1, 3, 2, 4]
    assert c_coefficients(-1) == []
    assert all(c_coefficients(20)[n] == restricted_partition_count(n, (2, 3, 4)) for n in range(21))


@pytest.mark.parametrize("m", range(16))
def test_odd_c_coefficients_count_partitions_into_one_two_three(m):
    assert c_coefficients(2 * m + 3)[2 * m + 3] == restricted_partition_count(m, (1, 2, 3))


@pytest.mark.parametrize("m", range(13))
def test_exterior_powers_are_dual_and_have_fixed_parity(m):
    for j in range(m + 2):
        decomposition = exterior_power_decomposition(m, j)
        assert decomposition == exterior_power_decomposition(m, m + 1 - j)
        assert decomposition.dim == comb(m + 1, j)
        assert all((weight - j * m) % 2 == 0 for weight, _ in decomposition.items())


@pytest.mark.parametrize(
    "j,m,expected",
    [
        (3, 6, "V_0+V_4+V_6+V_8+V_12"),
        (4, 7, "V_0+2V_4+2V_8+V_10+V_12+V_16"),
        (4, 5, "V_0+V_4+V_8"),
        (1, 5, "V_5"),
        (3, 3, "V_3"),
        (3, 2, "V_0"),
        (0, 4, "V_0"),
    ],
)
def test_golden_exterior_powers(j, m, expected):
    assert exterior_power_decomposition(m, j) == Sl2Decomposition.parse(expected)
    assert exterior_power_decomposition(m, j, "brute") == Sl2Decomposition.parse(expected)


def test_lambda3_of_v8_follows_weight_enumeration():
    # Every weight of Λ³(V_8) is even, so no V_7 can occur.
    expected = Sl2Decomposition.parse("V_2+2V_6+V_8+V_10+V_12+V_14+V_18")
    assert exterior_power_decomposition(8, 3, "brute") == expected
    assert exterior_power_decomposition(8, 3, "formula") == expected
    assert expected.dim == comb(9, 3)


def test_formula_and_brute_force_agree():
    for m in range(11):
        for j in range(m + 2):
            formula = exterior_power_decomposition(m, j, "formula")
            assert formula == exterior_power_decomposition(m, j, "brute")
            assert formula.dim == comb(m + 1, j)


def test_out_of_range_exterior_power_is_zero():
    assert exterior_power_decomposition(3, 5) == Sl2Decomposition()
    with pytest.raises(ValueError):
        exterior_power_decomposition(3, 2, "plethysm")


def test_multiplicity_N_identities():
    for r in range(1, 9):
        assert multiplicity_N(3, 4 * r, 6 * r - 1) == 0
        assert multiplicity_N(3, 4 * r + 2, 6 * r + 2) == 1
    for k in range(1, 41):
        assert multiplicity_N(4, k, 2 * k - 1) == 0


def test_lambda4_multiplicity():
    assert lambda4_multiplicity(4, 4) == 2
    assert lambda4_multiplicity(2, 2) == 1
    for k in range(1, 31):
        assert lambda4_multiplicity(1, k) == 0
        for ell in range(1, 2 * k + 1):
            assert lambda4_multiplicity(ell, k) == multiplicity_N(4, k, 2 * k - ell)


def test_lambda3_self_multiplicity():
    assert lambda3_self_multiplicity(3) == 1
    assert lambda3_self_multiplicity(6) == 1
    assert lambda3_self_multiplicity(2) == 0
    for m in range(31):
        assert lambda3_self_multiplicity(m) == exterior_power_decomposition(m, 3, "brute")[m]


def test_brute_force_guardrail(monkeypatch):
    monkeypatch.setattr(settings, "LIECOH_MAX_SUBSETS", 10)
    with pytest.raises(GuardrailExceeded) as info:
        exterior_weights(10, 5)
    assert info.value.size == comb(11, 5)


@pytest.mark.parametrize("m", [1, 3, 5, 7, 9])
def test_odd_radicals_have_no_equivariant_maps_of_mismatched_parity(m):
    V_m, s = Sl2Decomposition.of(m), Sl2Decomposition.of(2)
    for k in range(0, m + 2, 2):
        assert hom_dim(exterior_power_decomposition(m, k), V_m) == 0
        assert hom_dim(exterior_power_decomposition(m, k + 1), s) == 0
