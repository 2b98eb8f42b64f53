"""
Complex non-semisimple perfect Lie algebras of dimension <= 9.

Each entry records the algebra's name, its Turkowski label, its dimension
and the expected (dim H^0, dim H^1, dim H^2) of the adjoint module. The
recipes build every algebra from sl2 modules; the one whose radical is only
available as external data is loaded from an AlgebraFile on request.
"""
import json
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Union

from pydantic import ValidationError

from liecoh.config import settings
from liecoh.core.exceptions import ExternalDataRequired, LieCohError, ParseError, UnknownLabel
from liecoh.core.linalg import SparseMatrix
from liecoh.core.pool import map_ordered
from liecoh.models.lie import LieAlgebra, Representation
from liecoh.schemas.algebra_file import AlgebraDocument, bracket_entry
from liecoh.services.cohomology import adjoint_betti_numbers
from liecoh.services.lie import (
    abelian,
    direct_sum,
    free_nilpotent,
    heisenberg_from_symplectic,
    rep_direct_sum,
    semidirect_by_derivations,
    semidirect_product,
    validate_lie_algebra,
)
from liecoh.services.sl2 import irrep, sl2, sl2_module, symplectic_form

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]
DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    name: str
    turkowski: str
    dim: int
    expected: Triple
    recipe: Optional[Callable[[], LieAlgebra]] = None  # None: external data
    in_table: bool = True
    external_file: Optional[str] = None

    @property
    def is_external(self) -> bool:
        return self.recipe is None


@dataclass(frozen=True)
class TableRow:
    entry: CatalogEntry
    computed: Optional[Triple]
    status: str  # "pass", "fail", "skipped(external)" or "error"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status in ("pass", "skipped(external)")


# ============================================
# Recipes
# ============================================

def sl2_semidirect(*highest_weights: int) -> LieAlgebra:
    """sl2 ⋉ (V_a ⊕ V_b ⊕ ...)."""
    module = sl2_module(*highest_weights)
    label = "+".join(f"V_{m}" for m in highest_weights)
    name = f"sl2⋉V_{highest_weights[0]}" if len(highest_weights) == 1 else f"sl2⋉({label})"
    return semidirect_product(sl2(), module, name=name)


def _n3() -> Tuple[LieAlgebra, Representation]:
    return heisenberg_from_symplectic(irrep(1), symplectic_form(1), name="n_3")


def _with_module(N: LieAlgebra, action: Representation, *highest_weights: int) -> Tuple[LieAlgebra, Representation]:
    """V ⊕ N with V abelian, V first."""
    module = sl2_module(*highest_weights)
    total = direct_sum(abelian(module.dim, module.name), N)
    return total, rep_direct_sum(module, action)


def sl2_heisenberg() -> LieAlgebra:
    N, action = _n3()
    return semidirect_by_derivations(sl2(), N, action, name="sl2⋉n_3")


def eps_family(eps: Fraction) -> LieAlgebra:
    """sl2 ⋉ N_eps, N_eps = V_1 ⊕ V_1 ⊕ Cz with omega = omega_1 ⊕ eps omega_2."""
    rho = sl2_module(1, 1)
    omega = SparseMatrix(4, 4, {(0, 1): 1, (1, 0): -1, (2, 3): eps, (3, 2): -eps})
    N, action = heisenberg_from_symplectic(rho, omega, name=f"N_{eps}")
    return semidirect_by_derivations(sl2(), N, action, name=f"sl2⋉N_{eps}")


def sl2_free_nilpotent(generator_weight: int, nil_class: int) -> LieAlgebra:
    F, action = free_nilpotent(irrep(generator_weight), nil_class)
    return semidirect_by_derivations(sl2(), F, action, name=f"sl2⋉{F.name}")


def sl2_symplectic_n5() -> LieAlgebra:
    N, action = heisenberg_from_symplectic(irrep(3), symplectic_form(3), name="n_5")
    return semidirect_by_derivations(sl2(), N, action, name="sl2⋉_ψ n_5")


def sl2_module_plus_n3(*highest_weights: int) -> LieAlgebra:
    N, action = _with_module(*_n3(), *highest_weights)
    return semidirect_by_derivations(sl2(), N, action, name=f"sl2⋉({N.name})")


def sl2_n3_n3() -> LieAlgebra:
    (n1, a1), (n2, a2) = _n3(), _n3()
    N = direct_sum(n1, n2, name="n_3+n_3")
    return semidirect_by_derivations(sl2(), N, rep_direct_sum(a1, a2), name="sl2⋉(n_3+n_3)")


def sl2_plus(inner: Callable[[], LieAlgebra]) -> Callable[[], LieAlgebra]:
    def build_sum() -> LieAlgebra:
        g = inner()
        return direct_sum(sl2(), g, name=f"sl2+{g.name}")

    return build_sum


ENTRIES: List[CatalogEntry] = [
    CatalogEntry("L_{5,1}", "sl2⋉V_1", "L_{5,1}", 5, (0, 1, 0), lambda: sl2_semidirect(1)),
    CatalogEntry("L_{6,4}", "sl2⋉V_2", "L_{6,4}≅L_{6,1}", 6, (0, 1, 1), lambda: sl2_semidirect(2)),
    CatalogEntry("L_{6,2}", "sl2⋉n_3", "L_{6,2}", 6, (1, 1, 0), sl2_heisenberg),
    CatalogEntry("L_{7,6}", "sl2⋉V_3", "L_{7,6}", 7, (0, 1, 0), lambda: sl2_semidirect(3)),
    CatalogEntry("L_{7,7}", "sl2⋉(V_1+V_1)", "L_{7,7}", 7, (0, 4, 0), lambda: sl2_semidirect(1, 1)),
    CatalogEntry("sl2+L_{5,1}", "sl2+(sl2⋉V_1)", "sl2⊕L_{5,1}", 8, (0, 1, 0),
                 sl2_plus(lambda: sl2_semidirect(1))),
    CatalogEntry("L_{8,21}", "sl2⋉V_4", "L_{8,21}", 8, (0, 1, 1), lambda: sl2_semidirect(4)),
    CatalogEntry("L_{8,22}", "sl2⋉(V_1+V_2)", "L_{8,22}", 8, (0, 2, 1), lambda: sl2_semidirect(1, 2)),
    CatalogEntry("L_{8,13}^0", "sl2⋉(V_1+n_3)", "L_{8,13}^{ε=0}", 8, (1, 3, 0), lambda: eps_family(Fraction(0))),
    CatalogEntry("L_{8,15}", "sl2⋉f_{2,3}", "L_{8,15}", 8, (0, 1, 1), lambda: sl2_free_nilpotent(1, 3)),
    CatalogEntry("L_{8,13}^1", "sl2⋉_φ n_5", "L_{8,13}^1≅L_{8,13}^{-1}", 8, (1, 2, 1),
                 lambda: eps_family(Fraction(1))),
    CatalogEntry("L_{8,19}", "sl2⋉_ψ n_5", "L_{8,19}", 8, (1, 1, 0), sl2_symplectic_n5),
    CatalogEntry("sl2+L_{6,1}", "sl2+(sl2⋉V_2)", "sl2⊕L_{6,1}", 9, (0, 1, 1),
                 sl2_plus(lambda: sl2_semidirect(2))),
    CatalogEntry("sl2+L_{6,2}", "sl2+(sl2⋉n_3)", "sl2⊕L_{6,2}", 9, (1, 1, 0), sl2_plus(sl2_heisenberg)),
    CatalogEntry("L_{9,59}", "sl2⋉V_5", "L_{9,59}", 9, (0, 1, 0), lambda: sl2_semidirect(5)),
    CatalogEntry("L_{9,60}", "sl2⋉(V_1+V_3)", "L_{9,60}", 9, (0, 2, 0), lambda: sl2_semidirect(1, 3)),
    CatalogEntry("L_{9,61}", "sl2⋉(V_2+V_2)", "L_{9,61}", 9, (0, 4, 4), lambda: sl2_semidirect(2, 2)),
    CatalogEntry("L_{9,63}", "sl2⋉(V_1+V_1+V_1)", "L_{9,63}", 9, (0, 9, 0), lambda: sl2_semidirect(1, 1, 1)),
    CatalogEntry("L_{9,58}", "sl2⋉(V_2+n_3)", "L_{9,58}", 9, (1, 2, 0), lambda: sl2_module_plus_n3(2)),
    CatalogEntry("L_{9,37}", "sl2⋉(n_3+n_3)", "L_{9,37}≅L_{9,42}", 9, (2, 2, 0), sl2_n3_n3),
    CatalogEntry("L_{9,62}", "sl2⋉f_{3,2}", "L_{9,62}", 9, (0, 2, 2), lambda: sl2_free_nilpotent(2, 2)),
    CatalogEntry("L_{9,41}", "sl2⋉A_{6,4}", "L_{9,41}", 9, (2, 3, 1), None, external_file="L_{9,41}.json"),
    # Not a separate table row: the other sign of the ε-family.
    CatalogEntry("L_{8,13}^-1", "sl2⋉_φ n_5 (ε=-1)", "L_{8,13}^{-1}", 8, (1, 2, 1),
                 lambda: eps_family(Fraction(-1)), in_table=False),
]

_BY_LABEL: Dict[str, CatalogEntry] = {e.label: e for e in ENTRIES}


def entries(table_only: bool = False) -> List[CatalogEntry]:
    return [e for e in ENTRIES if e.in_table or not table_only]


def get_entry(label: str) -> CatalogEntry:
    try:
        return _BY_LABEL[label]
    except KeyError:
        raise UnknownLabel(label) from None


# ============================================
# AlgebraFile I/O
# ============================================

_BRACKET_LINE = re.compile(r"\[\s*\d+\s*,\s*\d+\s*,")


def _bracket_line(text: str, position: int) -> Optional[int]:
    """1-based line of the ``position``-th bracket triple in ``text``."""
    count = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        for _ in _BRACKET_LINE.finditer(line):
            if count == position:
                return lineno
            count += 1
    return None


def parse_algebra(text: str, source: str = "<string>") -> LieAlgebra:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: {exc.msg}", line=exc.lineno, column=exc.colno) from None
    try:
        doc = AlgebraDocument.model_validate(raw)
    except ValidationError as exc:
        error = exc.errors()[0]
        loc = tuple(error["loc"])
        line = None
        if len(loc) >= 2 and loc[0] == "brackets" and isinstance(loc[1], int):
            line = _bracket_line(text, loc[1])
        else:
            match = re.search(r"brackets\.(\d+)", error["msg"])
            if match:
                line = _bracket_line(text, int(match.group(1)))
        where = ".".join(str(p) for p in loc) or "document"
        raise ParseError(f"{source}: {where}: {error['msg']}", line=line, location=loc) from None
    return validate_lie_algebra(doc.dim, doc.bracket_table(), doc.name)


def load(path: Union[str, Path]) -> LieAlgebra:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    g = parse_algebra(text, source=str(path))
    logger.info("loaded %s (dim %d) from %s", g.name, g.dim, path)
    return g


def to_document(g: LieAlgebra) -> AlgebraDocument:
    return AlgebraDocument(
        name=g.name,
        dim=g.dim,
        brackets=[bracket_entry(i, j, vec) for i, j, vec in g.nonzero_brackets()],
    )


def dumps(g: LieAlgebra) -> str:
    return to_document(g).to_text()


def save(g: LieAlgebra, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(dumps(g), encoding="utf-8")
    return path


def shipped(name: str) -> LieAlgebra:
    """An AlgebraFile shipped with the package, e.g. ``shipped("sl2")``."""
    return load(DATA_DIR / f"{name}.json")


# ============================================
# Building and verification
# ============================================

def _external_path(entry: CatalogEntry, external: Optional[Union[str, Path]]) -> Optional[Path]:
    if external is not None:
        return Path(external)
    if settings.LIECOH_EXTERNAL_DIR is not None:
        candidate = Path(settings.LIECOH_EXTERNAL_DIR) / entry.external_file
        if candidate.exists():
            return candidate
    return None


def build(label: str, external: Optional[Union[str, Path]] = None) -> LieAlgebra:
    entry = get_entry(label)
    if entry.recipe is not None:
        return entry.recipe()
    path = _external_path(entry, external)
    if path is None:
        raise ExternalDataRequired(entry.label, entry.external_file)
    return load(path).renamed(entry.name)


def adjoint_triple(g: LieAlgebra, *, fast: Optional[bool] = None) -> Triple:
    table = adjoint_betti_numbers(g, range(3), fast=fast, threads=0)
    return (table[0], table[1], table[2])


def verify_entry(entry: CatalogEntry, external: Optional[Union[str, Path]] = None,
                 fast: Optional[bool] = None) -> TableRow:
    if entry.is_external and _external_path(entry, external) is None:
        return TableRow(entry, None, "skipped(external)")
    try:
        g = build(entry.label, external)
        computed = adjoint_triple(g, fast=fast)
    except LieCohError as exc:
        logger.warning("%s: %s", entry.label, exc)
        return TableRow(entry, None, "error", str(exc))
    status = "pass" if computed == entry.expected else "fail"
    logger.info("%s: computed %s, expected %s: %s", entry.label, computed, entry.expected, status)
    return TableRow(entry, computed, status)


def verify_table(
    external: Optional[Union[str, Path]] = None,
    *,
    include_extra: bool = False,
    fast: Optional[bool] = None,
    threads: Optional[int] = None,
) -> List[TableRow]:
    """Recompute (h0, h1, h2) for every row, in table order."""
    selected = entries(table_only=not include_extra)
    return map_ordered(lambda e: verify_entry(e, external, fast), selected, threads)
