from fractions import Fraction

import pytest

from liecoh.config import settings
from liecoh.core.exceptions import ExternalDataRequired, JacobiViolation, ParseError, UnknownLabel
from liecoh.services import catalog
from liecoh.services.cohomology import betti_numbers
from liecoh.services.lie import center, is_nilpotent, is_perfect, outer_derivation_dim, trivial_module
from liecoh.services.sl2 import sl2

BUILDABLE = [e for e in catalog.entries() if not e.is_external]
QUICK = ["L_{5,1}", "L_{6,4}", "L_{6,2}", "L_{7,6}", "L_{7,7}", "L_{8,13}^0"]


def test_table_layout():
    table = catalog.entries(table_only=True)
    assert len(table) == 22
    assert len({e.label for e in catalog.entries()}) == len(catalog.entries())
    assert [e.label for e in table if e.is_external] == ["L_{9,41}"]
    assert all(e.dim <= 9 for e in table)


def test_get_entry():
    entry = catalog.get_entry("L_{7,7}")
    assert entry.expected == (0, 4, 0)
    with pytest.raises(UnknownLabel):
        catalog.get_entry("L_{4,1}")


@pytest.mark.parametrize("entry", BUILDABLE, ids=lambda e: e.label)
def test_recipes_build_perfect_algebras(entry):
    g = catalog.build(entry.label)
    assert g.dim == entry.dim
    assert is_perfect(g)
    assert is_nilpotent(g.construction.radical).nilpotent
    assert len(center(g)) == entry.expected[0]
    assert betti_numbers(g, trivial_module(g), range(2)).dims == (1, 0)


@pytest.mark.parametrize("entry", BUILDABLE, ids=lambda e: e.label)
def test_outer_derivations_give_first_cohomology(entry):
    assert outer_derivation_dim(catalog.build(entry.label)) == entry.expected[1]


@pytest.mark.parametrize("label", QUICK)
def test_verify_entry(label):
    row = catalog.verify_entry(catalog.get_entry(label))
    assert row.status == "pass"
    assert row.computed == row.entry.expected


def test_specific_recipes():
    g = catalog.build("L_{6,2}")
    assert g.dim == 6 and len(center(g)) == 1
    assert catalog.build("L_{9,61}").construction.radical.dim == 6


def test_both_signs_of_the_eps_family_agree():
    plus = catalog.adjoint_triple(catalog.build("L_{8,13}^1"))
    minus = catalog.adjoint_triple(catalog.build("L_{8,13}^-1"))
    assert plus == minus == (1, 2, 1)


def test_external_entry_without_data():
    with pytest.raises(ExternalDataRequired) as info:
        catalog.build("L_{9,41}")
    assert info.value.filename == "L_{9,41}.json"
    row = catalog.verify_entry(catalog.get_entry("L_{9,41}"))
    assert row.status == "skipped(external)"
    assert row.ok


def test_external_entry_from_directory(tmp_path, monkeypatch):
    # Any valid AlgebraFile is accepted as the external payload.
    catalog.save(catalog.build("L_{5,1}"), tmp_path / "L_{9,41}.json")
    monkeypatch.setattr(settings, "LIECOH_EXTERNAL_DIR", tmp_path)
    g = catalog.build("L_{9,41}")
    assert g.name == "sl2⋉A_{6,4}"
    assert g.dim == 5


def test_shipped_sl2():
    assert catalog.shipped("sl2") == sl2()


def test_save_and_load(tmp_path):
    g = catalog.build("L_{8,13}^1")
    path = catalog.save(g, tmp_path / "g.json")
    assert catalog.load(path) == g
    assert catalog.dumps(catalog.load(path)) == path.read_text(encoding="utf-8")


def test_rational_coefficients_survive_the_file_format():
    g = catalog.parse_algebra('{"name": "h", "dim": 3, "brackets": [[1, 2, [[3, "1/2"]]]]}')
    assert g.structure_constant(0, 1, 2) == Fraction(1, 2)
    with pytest.raises(ParseError):
        catalog.parse_algebra('{"name": "h", "dim": 3, "brackets": [[1, 2, [[3, "2/4"]]]]}')


def test_parse_errors_report_lines(sl2_file):
    text = sl2_file.read_text(encoding="utf-8").replace('[2, 3, [[2, "2"]]]', '[2, 4, [[2, "2"]]]')
    with pytest.raises(ParseError) as info:
        catalog.parse_algebra(text)
    assert info.value.line == 7

    with pytest.raises(ParseError) as info:
        catalog.parse_algebra('{"name": "x",\n "dim": 3,,}')
    assert info.value.line == 2

    with pytest.raises(ParseError):
        catalog.parse_algebra('{"name": "x", "dim": 2, "brackets": [], "extra": 1}')
    with pytest.raises(ParseError):
        catalog.parse_algebra('{"name": "x", "dim": 2, "brackets": [[2, 1, []]]}')
    with pytest.raises(ParseError):
        catalog.load(sl2_file.parent / "missing.json")


def test_jacobi_violation_from_file(broken_file):
    with pytest.raises(JacobiViolation):
        catalog.load(broken_file)


@pytest.mark.slow
def test_full_table():
    rows = catalog.verify_table(include_extra=True)
    assert [r.entry.label for r in rows] == [e.label for e in catalog.entries()]
    failures = [(r.entry.label, r.computed, r.entry.expected) for r in rows if not r.ok]
    assert not failures
    assert sum(1 for r in rows if r.status == "skipped(external)") == 1
