from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from liecoh.models.cohomology import BettiTable, HochschildSerreResult, LesReport
from liecoh.models.weights import Sl2Decomposition

# ============================================
# Cohomology
# ============================================

class BettiRowOut(BaseModel):
    degree: int
    cochain_dim: int
    rank: Optional[int] = None
    h: int


class BettiTableOut(BaseModel):
    algebra: str
    module: str
    rows: List[BettiRowOut]
    dims: List[int]
    euler_characteristic: int
    complete: bool

    @classmethod
    def from_table(cls, table: BettiTable) -> "BettiTableOut":
        return cls(
            algebra=table.algebra,
            module=table.module,
            rows=[BettiRowOut(degree=r.degree, cochain_dim=r.cochain_dim, rank=r.rank, h=r.h) for r in table.rows],
            dims=list(table.dims),
            euler_characteristic=table.euler_characteristic,
            complete=table.complete,
        )


class DisagreementOut(BaseModel):
    degree: int
    assembled: int
    direct: int


class HochschildSerreOut(BaseModel):
    invariant_table: BettiTableOut
    verified_degrees: List[int]
    disagreements: List[DisagreementOut]

    @classmethod
    def from_result(cls, result: HochschildSerreResult) -> "HochschildSerreOut":
        return cls(
            invariant_table=BettiTableOut.from_table(result.invariant_table),
            verified_degrees=list(result.verified_degrees),
            disagreements=[DisagreementOut(degree=k, assembled=a, direct=d) for k, a, d in result.disagreements],
        )


class DerivationCheckOut(BaseModel):
    center_dim: int
    derivation_dim: int
    outer_dim: int


class CohomologyOut(BaseModel):
    method: str
    table: BettiTableOut
    hochschild_serre: Optional[HochschildSerreOut] = None
    derivations: Optional[DerivationCheckOut] = None


class LesRowOut(BaseModel):
    degree: int
    radical: int = Field(..., description="dim H^k(V, V)^s")
    algebra: int = Field(..., description="dim H^k(V, g)^s")
    quotient: int = Field(..., description="dim H^k(V, g/V)^s")


class LesReportOut(BaseModel):
    m: int
    rows: List[LesRowOut]
    alternating_sum: int
    exact: bool
    failures: List[str]

    @classmethod
    def from_report(cls, report: LesReport) -> "LesReportOut":
        return cls(
            m=report.m,
            rows=[LesRowOut(degree=r.degree, radical=r.radical, algebra=r.algebra, quotient=r.quotient)
                  for r in report.rows],
            alternating_sum=report.alternating_sum,
            exact=report.exact,
            failures=list(report.failures),
        )


class PredictionOut(BaseModel):
    quantity: str
    predicted: Optional[int] = None
    computed: int
    ok: bool


class PredictionReportOut(BaseModel):
    m: int
    checks: List[PredictionOut]


# ============================================
# sl2 plethysm
# ============================================

class SummandOut(BaseModel):
    highest_weight: int
    multiplicity: int


class DecompositionOut(BaseModel):
    query: str
    decomposition: str
    dim: int
    summands: List[SummandOut]

    @classmethod
    def from_decomposition(cls, query: str, decomposition: Sl2Decomposition) -> "DecompositionOut":
        return cls(
            query=query,
            decomposition=str(decomposition),
            dim=decomposition.dim,
            summands=[SummandOut(highest_weight=m, multiplicity=n) for m, n in decomposition.items()],
        )


class MultiplicityOut(BaseModel):
    kind: str
    arguments: List[int]
    value: Optional[int] = None
    values: Optional[List[int]] = None


# ============================================
# Catalog
# ============================================

class CatalogEntryOut(BaseModel):
    label: str
    name: str
    turkowski: str
    dim: int
    expected: List[int]
    external: bool
    in_table: bool


class TableRowOut(BaseModel):
    position: int
    label: str
    name: str
    turkowski: str
    dim: int
    expected: List[int]
    computed: Optional[List[int]] = None
    status: str
    detail: str = ""


class TableReportOut(BaseModel):
    rows: List[TableRowOut]
    passed: int
    failed: int
    skipped: int


class ValidationOut(BaseModel):
    name: str
    dim: int
    perfect: bool
    nilpotent: bool
    nil_class: Optional[int] = None
    center_dim: int
    derived_dim: int


# ============================================
# CLI envelope
# ============================================

class OutputRecord(BaseModel):
    """One command's output document; serialized with sorted keys."""

    command: str
    parameters: Dict[str, Any]
    result: Any
    timing_ms: Optional[float] = None
