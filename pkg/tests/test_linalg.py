import random
from fractions import Fraction

import pytest
import sympy

from liecoh.core.exceptions import DimensionMismatch
from liecoh.core.linalg import (
    SparseMatrix,
    format_rational,
    kernel_basis,
    nullspace,
    parse_rational,
    rank,
    row_space_basis,
    span_dim,
    to_rational,
)
from liecoh.core.modular import agreed_modular_rank, modular_rank, random_primes
from liecoh.core.pool import map_ordered


def _random_matrix(rows: int, cols: int, seed: int, density: float = 0.3) -> SparseMatrix:
    rng = random.Random(seed)
    entries = {}
    for r in range(rows):
        for c in range(cols):
            if rng.random() < density:
                entries[(r, c)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return SparseMatrix(rows, cols, entries)


def test_rational_formatting():
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert parse_rational("−1/2") == Fraction(-1, 2)
    assert parse_rational(" 7 ") == Fraction(7)


def test_rational_parsing_rejects_bad_literals():
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("1.5")
    for text in ("2/4", "-6/3", "0/5"):
        with pytest.raises(ValueError):
            parse_rational(text)
    assert parse_rational("0") == 0 and parse_rational("3/1") == 3
    with pytest.raises(TypeError):
        to_rational(1.5)


def test_sparse_matrix_drops_zeros_and_checks_bounds():
    M = SparseMatrix(2, 2, {(0, 0): 0, (1, 1): Fraction(1, 2)})
    assert M.nnz == 1
    assert M[(1, 1)] == Fraction(1, 2)
    with pytest.raises(DimensionMismatch):
        SparseMatrix(2, 2, {(2, 0): 1})


def test_arithmetic():
    A = SparseMatrix.from_dense([[1, 2], [0, 1]])
    B = SparseMatrix.from_dense([[0, 1], [1, 0]])
    assert (A @ B).to_dense() == [[2, 1], [1, 0]]
    assert A.T.to_dense() == [[1, 0], [2, 1]]
    assert A.commutator(B) == A @ B - B @ A
    assert A.apply([1, 1]) == [3, 1]
    assert A.apply({1: 2}) == [4, 2]
    with pytest.raises(DimensionMismatch):
        A @ SparseMatrix.zeros(3, 1)


def test_rank_small_cases():
    assert rank(SparseMatrix.zeros(3, 4)) == 0
    assert rank(SparseMatrix.identity(5)) == 5
    assert rank(SparseMatrix.from_dense([[1, 2], [2, 4]])) == 1
    assert rank(SparseMatrix.from_dense([[Fraction(1, 3), 1], [1, 3]])) == 1


@pytest.mark.parametrize("seed", range(6))
def test_rank_matches_sympy(seed):
    M = _random_matrix(9, 11, seed)
    assert rank(M, fast=False) == sympy.Matrix(M.to_dense()).rank()


def test_block_diagonal_rank_adds_up():
    left = _random_matrix(5, 5, 1, density=0.6)
    right = _random_matrix(4, 6, 2, density=0.6)
    entries = dict(left.entries)
    entries.update({(r + 5, c + 5): v for (r, c), v in right.entries.items()})
    M = SparseMatrix(9, 11, entries)
    assert rank(M) == rank(left) + rank(right)


def test_modular_rank_agrees_with_exact():
    M = _random_matrix(12, 10, 7, density=0.4)
    primes = [1_000_003, 998_244_353]
    assert modular_rank(M, primes[0]) == rank(M, fast=False)
    assert agreed_modular_rank(M, primes) == rank(M, fast=False)
    assert rank(M, fast=True) == rank(M, fast=False)


P, Q = 1_000_003, 998_244_353


def test_modular_rank_works_on_primitive_rows():
    # each row is divided by its content before reduction
    assert modular_rank(SparseMatrix.from_dense([[P * Q]]), P) == 1


def test_prime_dividing_an_entry_falls_back_to_exact(monkeypatch):
    M = SparseMatrix.from_dense([[1, P * Q], [1, 0]])
    assert modular_rank(M, P) == modular_rank(M, Q) == 1
    assert agreed_modular_rank(M, [P, Q]) is None
    monkeypatch.setattr("liecoh.core.modular.random_primes", lambda count=2, rng=None: [P, Q])
    assert rank(M, fast=True) == 2


def test_random_primes_are_distinct_and_large():
    primes = random_primes(2, random.Random(3))
    assert len(set(primes)) == 2
    assert all(2**30 <= p < 2**31 and sympy.isprime(p) for p in primes)


def test_nullspace_with_singleton_rows():
    M = SparseMatrix.from_dense([[1, 1, 0], [0, 0, 1]])
    ns = nullspace(M)
    assert ns.dim == 1
    assert ns.free == (1,)
    assert ns.dense() == [(Fraction(-1), Fraction(1), Fraction(0))]
    assert ns.coordinates([-5, 5, 0]) == [Fraction(5)]


@pytest.mark.parametrize("seed", range(4))
def test_kernel_vectors_are_annihilated(seed):
    M = _random_matrix(7, 12, seed, density=0.35)
    basis = kernel_basis(M)
    assert len(basis) == 12 - rank(M)
    for vec in basis:
        assert all(v == 0 for v in M.apply(vec))
    assert span_dim(basis) == len(basis)


def test_row_space_basis():
    basis = row_space_basis([[1, 2, 0], [2, 4, 0], [0, 1, 1]])
    assert len(basis) == 2
    assert span_dim([{0: 1}, {1: 1}, {0: 1, 1: 1}]) == 2


def test_map_ordered_keeps_input_order():
    items = list(range(20))
    assert map_ordered(lambda x: x * x, items, threads=4) == [x * x for x in items]
    assert map_ordered(lambda x: -x, items, threads=0) == [-x for x in items]
