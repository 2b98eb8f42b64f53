import pytest

from liecoh.config import settings
from liecoh.core.exceptions import GuardrailExceeded, ModuleMismatch, NotASemidirectProduct, UnsupportedLevi
from liecoh.core.linalg import SparseMatrix, rank
from liecoh.services import catalog
from liecoh.services.catalog import build, sl2_semidirect
from liecoh.services.cohomology import (
    adjoint_betti_numbers,
    betti_numbers,
    ce_differential,
    complex_ranks,
    hochschild_serre_adjoint,
    rank_problems,
)
from liecoh.services.lie import abelian, adjoint_representation, heisenberg_from_symplectic, trivial_module
from liecoh.services.predictions import total_adjoint
from liecoh.services.sl2 import irrep, sl2, symplectic_form


def test_sl2_cohomology():
    s = sl2()
    assert betti_numbers(s, trivial_module(s)).dims == (1, 0, 0, 1)
    assert adjoint_betti_numbers(s).dims == (0, 0, 0, 0)


def test_abelian_and_heisenberg_trivial_cohomology():
    a = abelian(2)
    assert betti_numbers(a, trivial_module(a)).dims == (1, 2, 1)
    N, _ = heisenberg_from_symplectic(irrep(1), symplectic_form(1))
    assert betti_numbers(N, trivial_module(N)).dims == (1, 2, 2, 1)


@pytest.mark.parametrize("m", [1, 2])
def test_differential_squares_to_zero(m):
    g = sl2_semidirect(m)
    ad = adjoint_representation(g)
    for k in range(g.dim - 1):
        assert (ce_differential(g, ad, k + 1) @ ce_differential(g, ad, k)).is_zero()


@pytest.mark.parametrize(
    "entry", [e for e in catalog.entries() if not e.is_external], ids=lambda e: e.label
)
def test_catalog_differentials_square_to_zero(entry):
    g = build(entry.label)
    ad = adjoint_representation(g)
    for k in range(2):
        assert (ce_differential(g, ad, k + 1) @ ce_differential(g, ad, k)).is_zero()


def test_differential_shape_at_the_top():
    s = sl2()
    d = ce_differential(s, adjoint_representation(s), 3)
    assert d.shape == (0, 3)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_total_adjoint_tables(m):
    table = adjoint_betti_numbers(sl2_semidirect(m))
    assert table.dims == total_adjoint(m)
    assert table.complete
    assert table.euler_characteristic == 0


def test_requested_degrees_only():
    table = adjoint_betti_numbers(sl2_semidirect(2), [4, 1])
    assert table.degrees == (1, 4)
    assert table[1] == 1 and table[4] == 1
    assert not table.complete


def test_fast_rank_matches_exact():
    g = sl2_semidirect(1, 1)
    assert adjoint_betti_numbers(g, range(4), fast=True).dims == adjoint_betti_numbers(g, range(4), fast=False).dims


P, Q = 1_000_003, 998_244_353


def test_rank_problems():
    assert rank_problems({0: 1}, [2, 2], {0: 1}) == []
    assert rank_problems({0: 3}, [2, 2], {})
    assert rank_problems({0: 2, 1: 2}, [2, 3, 2], {})
    assert rank_problems({0: 1}, [2, 2], {0: 0})


def test_modular_ranks_that_contradict_known_cohomology_are_recomputed(monkeypatch):
    # det = P*Q, so both primes see rank 1 without dividing any entry
    d0 = SparseMatrix.from_dense([[1, 1], [1, 1 + P * Q]])
    monkeypatch.setattr("liecoh.core.modular.random_primes", lambda count=2, rng=None: [P, Q])
    assert complex_ranks(lambda k: d0, [2, 2], [0], fast=True, expected_h=lambda: {0: 0}) == {0: 2}
    assert complex_ranks(lambda k: d0, [2, 2], [0], fast=False) == {0: 2}


def test_betti_numbers_survive_a_wrong_modular_rank(monkeypatch):
    def one_short(M, primes=None):
        return rank(M, fast=False) - 1

    monkeypatch.setattr("liecoh.core.modular.agreed_modular_rank", one_short)
    s = sl2()
    assert adjoint_betti_numbers(s, fast=True).dims == (0, 0, 0, 0)
    assert betti_numbers(s, trivial_module(s), fast=True).dims == (1, 0, 0, 1)


def test_threads_do_not_change_results():
    g = sl2_semidirect(2)
    assert adjoint_betti_numbers(g, threads=4).dims == adjoint_betti_numbers(g, threads=0).dims


def test_module_must_belong_to_the_algebra():
    with pytest.raises(ModuleMismatch):
        betti_numbers(sl2(), adjoint_representation(abelian(3)))


def test_cochain_guardrail(monkeypatch):
    monkeypatch.setattr(settings, "LIECOH_MAX_COCHAIN_BASIS", 10)
    g = sl2_semidirect(1)
    with pytest.raises(GuardrailExceeded):
        adjoint_betti_numbers(g, [2])


def test_hochschild_serre_matches_direct():
    result = hochschild_serre_adjoint(sl2_semidirect(2), verify_degrees=range(7))
    assert result.table.dims == (0, 1, 1, 0, 1, 1, 0)
    assert result.agrees
    assert result.verified_degrees == tuple(range(7))
    assert all(row.rank is None for row in result.table.rows)


def test_hochschild_serre_on_a_nilpotent_radical():
    g = build("L_{6,2}")
    result = hochschild_serre_adjoint(g, range(3))
    assert result.table.dims == (1, 1, 0)
    assert result.agrees


def test_hochschild_serre_needs_a_construction():
    with pytest.raises(NotASemidirectProduct):
        hochschild_serre_adjoint(abelian(2))
    with pytest.raises(UnsupportedLevi):
        hochschild_serre_adjoint(build("sl2+L_{5,1}"))
