"""
Query layer shared by the command line and the HTTP API: takes plain
parameters, runs the engine and returns schema objects.
"""
import logging
import re
from pathlib import Path
from typing import List, Optional, Union

from liecoh.core.exceptions import UnknownLabel
from liecoh.models.lie import LieAlgebra
from liecoh.schemas.results import (
    BettiTableOut,
    CatalogEntryOut,
    CohomologyOut,
    DecompositionOut,
    DerivationCheckOut,
    HochschildSerreOut,
    LesReportOut,
    MultiplicityOut,
    PredictionOut,
    PredictionReportOut,
    TableReportOut,
    TableRowOut,
    ValidationOut,
)
from liecoh.services import catalog
from liecoh.services.cohomology import betti_numbers, hochschild_serre_adjoint
from liecoh.services.invariants import invariant_cohomology, les_modules, les_report
from liecoh.services.lie import (
    adjoint_representation,
    center,
    derivations,
    derived_subalgebra,
    is_nilpotent,
    is_perfect,
    trivial_module,
)
from liecoh.services.plethysm import (
    c_coefficients,
    exterior_power_decomposition,
    lambda3_self_multiplicity,
    lambda4_multiplicity,
    multiplicity_N,
    partition_count,
)
from liecoh.services.predictions import check_predictions
from liecoh.services.sl2 import clebsch_gordan, sl2

logger = logging.getLogger(__name__)

_SEMIDIRECT = re.compile(r"^sl2xV(?:(\d+)|\{([\d,\s]+)\})$")

MULTIPLICITY_ARITY = {"N": 3, "p": 3, "c": 1, "lambda3": 1, "lambda4": 2}
COEFFICIENTS = ("V", "g", "g/V")


def resolve_algebra(
    selector: Optional[str] = None,
    file: Optional[Union[str, Path]] = None,
    external: Optional[Union[str, Path]] = None,
) -> LieAlgebra:
    """``sl2``, ``sl2xV3``, ``sl2xV{1,2}``, a catalog label, or an AlgebraFile path."""
    if file is not None:
        return catalog.load(file)
    if selector is None:
        raise UnknownLabel("")
    if selector == "sl2":
        return sl2()
    match = _SEMIDIRECT.match(selector.replace(" ", ""))
    if match:
        weights = [int(match.group(1))] if match.group(1) else [int(w) for w in match.group(2).split(",") if w]
        if not weights:
            raise UnknownLabel(selector)
        return catalog.sl2_semidirect(*weights)
    return catalog.build(selector, external)


class QueryService:
    def __init__(self, threads: Optional[int] = None, fast: Optional[bool] = None):
        self.threads = threads
        self.fast = fast

    # -- cohomology -----------------------------------------------------

    def cohomology(
        self,
        g: LieAlgebra,
        module: str = "adjoint",
        max_degree: Optional[int] = None,
        method: str = "direct",
        with_derivations: bool = False,
    ) -> CohomologyOut:
        top = g.dim if max_degree is None else min(max_degree, g.dim)
        degrees = range(top + 1)
        hs = None
        if method == "hochschild-serre":
            if module != "adjoint":
                raise ValueError("the Hochschild-Serre path computes adjoint cohomology only")
            result = hochschild_serre_adjoint(g, degrees, fast=self.fast, threads=self.threads)
            table = result.table
            hs = HochschildSerreOut.from_result(result)
        else:
            M = adjoint_representation(g) if module == "adjoint" else trivial_module(g)
            table = betti_numbers(g, M, degrees, fast=self.fast, threads=self.threads)
        der = None
        if with_derivations:
            z = len(center(g))
            d = len(derivations(g))
            der = DerivationCheckOut(center_dim=z, derivation_dim=d, outer_dim=d - (g.dim - z))
        return CohomologyOut(method=method, table=BettiTableOut.from_table(table), hochschild_serre=hs, derivations=der)

    def invariant_cohomology(self, m: int, coefficients: str, max_degree: Optional[int] = None) -> BettiTableOut:
        if coefficients not in COEFFICIENTS:
            raise ValueError(f"coefficients must be one of {', '.join(COEFFICIENTS)}")
        V, s_on_V, modules = les_modules(m)
        _, W, s_on_W = next(item for item in modules if item[0] == coefficients)
        top = V.dim if max_degree is None else max_degree
        table = invariant_cohomology(V, W, s_on_V, s_on_W, range(top + 1), fast=self.fast, threads=self.threads)
        return BettiTableOut.from_table(table)

    def les_report(self, m: int, max_degree: Optional[int] = None) -> LesReportOut:
        return LesReportOut.from_report(les_report(m, max_degree, threads=self.threads))

    def predict(self, m: int) -> PredictionReportOut:
        checks = check_predictions(m, threads=self.threads)
        return PredictionReportOut(
            m=m,
            checks=[PredictionOut(quantity=c.quantity, predicted=c.predicted, computed=c.computed, ok=c.ok)
                    for c in checks],
        )

    def validate(self, g: LieAlgebra) -> ValidationOut:
        nil = is_nilpotent(g)
        return ValidationOut(
            name=g.name,
            dim=g.dim,
            perfect=is_perfect(g),
            nilpotent=nil.nilpotent,
            nil_class=nil.nil_class,
            center_dim=len(center(g)),
            derived_dim=len(derived_subalgebra(g)),
        )

    # -- plethysm -------------------------------------------------------

    def exterior(self, j: int, m: int, method: str = "formula") -> DecompositionOut:
        return DecompositionOut.from_decomposition(f"Λ^{j}(V_{m})", exterior_power_decomposition(m, j, method))

    def tensor(self, a: int, b: int) -> DecompositionOut:
        return DecompositionOut.from_decomposition(f"V_{a}⊗V_{b}", clebsch_gordan(a, b))

    def multiplicity(self, kind: str, arguments: List[int]) -> MultiplicityOut:
        arity = MULTIPLICITY_ARITY.get(kind)
        if arity is None:
            raise ValueError(f"unknown multiplicity kind {kind!r}")
        if len(arguments) != arity:
            raise ValueError(f"{kind} takes {arity} integer arguments, got {len(arguments)}")
        if kind == "c":
            return MultiplicityOut(kind=kind, arguments=arguments, values=c_coefficients(arguments[0]))
        if kind == "N":
            value = multiplicity_N(*arguments)
        elif kind == "p":
            value = partition_count(*arguments)
        elif kind == "lambda3":
            value = lambda3_self_multiplicity(arguments[0])
        else:
            value = lambda4_multiplicity(*arguments)
        return MultiplicityOut(kind=kind, arguments=arguments, value=value)

    # -- catalog --------------------------------------------------------

    def catalog(self) -> List[CatalogEntryOut]:
        return [
            CatalogEntryOut(
                label=e.label,
                name=e.name,
                turkowski=e.turkowski,
                dim=e.dim,
                expected=list(e.expected),
                external=e.is_external,
                in_table=e.in_table,
            )
            for e in catalog.entries()
        ]

    def catalog_entry(self, label: str) -> CatalogEntryOut:
        e = catalog.get_entry(label)
        return CatalogEntryOut(label=e.label, name=e.name, turkowski=e.turkowski, dim=e.dim,
                               expected=list(e.expected), external=e.is_external, in_table=e.in_table)

    def table(self, external: Optional[Union[str, Path]] = None, include_extra: bool = False) -> TableReportOut:
        rows = catalog.verify_table(external, include_extra=include_extra, fast=self.fast, threads=self.threads)
        out = [
            TableRowOut(
                position=pos,
                label=row.entry.label,
                name=row.entry.name,
                turkowski=row.entry.turkowski,
                dim=row.entry.dim,
                expected=list(row.entry.expected),
                computed=list(row.computed) if row.computed is not None else None,
                status=row.status,
                detail=row.detail,
            )
            for pos, row in enumerate(rows, start=1)
        ]
        return TableReportOut(
            rows=out,
            passed=sum(1 for r in rows if r.status == "pass"),
            failed=sum(1 for r in rows if r.status in ("fail", "error")),
            skipped=sum(1 for r in rows if r.status == "skipped(external)"),
        )
