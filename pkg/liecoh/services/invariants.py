"""
s-invariant subcomplexes of C^*(N; W) and the long exact sequence bookkeeping
for g = sl2 ⋉ V_m.
"""
import logging
from typing import Dict, Iterable, List, Optional, Sequence

from liecoh.core.exceptions import DimensionMismatch, IncompatibleActions, RepresentationMismatch
from liecoh.core.linalg import Nullspace, SparseMatrix, nullspace
from liecoh.core.pool import map_ordered
from liecoh.models.cohomology import BettiTable, CochainSpace, InvariantComplex, LesReport, LesRow, betti_rows
from liecoh.models.lie import LieAlgebra, Representation
from liecoh.models.weights import Sl2Decomposition
from liecoh.services.cohomology import ce_differential, check_cochain_size, complex_ranks
from liecoh.services.lie import (
    adjoint_representation,
    exterior_power_matrix,
    is_derivation,
    quotient_module,
    restrict,
    semidirect_product,
    submodule,
)
from liecoh.services.plethysm import exterior_power_decomposition
from liecoh.services.sl2 import hom_dim, irrep, sl2

logger = logging.getLogger(__name__)


def invariant_subspace(actions: Sequence[SparseMatrix], dim: Optional[int] = None) -> Nullspace:
    """Joint kernel of square matrices of one common size."""
    if dim is None:
        if not actions:
            raise DimensionMismatch("dimension is required when there are no actions")
        dim = actions[0].rows
    for A in actions:
        if A.shape != (dim, dim):
            raise DimensionMismatch(f"action of shape {A.shape} on a {dim}-dimensional space")
    return nullspace(SparseMatrix.vstack(list(actions), cols=dim) if actions else SparseMatrix.zeros(0, dim))


def cochain_action(
    N: LieAlgebra, module_dim: int, a: SparseMatrix, b: SparseMatrix, k: int
) -> SparseMatrix:
    """Action of one s-basis element on C^k(N; W) = Λ^k(N*) ⊗ W.

    ``a`` acts on N and ``b`` on W; the result is Λ^k(-a^T) ⊗ 1 + 1 ⊗ b in the
    CochainSpace basis.
    """
    space = CochainSpace(N.dim, module_dim, k)
    dual = exterior_power_matrix(-a.T, k, space.subsets)
    d = module_dim
    entries: Dict = {}
    for (I, J), v in dual.entries.items():
        for c in range(d):
            entries[(I * d + c, J * d + c)] = v
    for (r, c), v in b.entries.items():
        for s in range(len(space.subsets)):
            key = (s * d + r, s * d + c)
            entries[key] = entries.get(key, 0) + v
    return SparseMatrix(space.dim, space.dim, entries)


def check_compatible(N: LieAlgebra, W: Representation, s_on_N: Representation, s_on_W: Sequence[SparseMatrix]) -> None:
    """s acts on N by derivations and b(x) rho(n) - rho(n) b(x) = rho(a(x) n)."""
    if W.algebra != N:
        raise IncompatibleActions("coefficient module does not act through the radical")
    if s_on_N.dim != N.dim or len(s_on_W) != s_on_N.algebra.dim:
        raise IncompatibleActions("s-action data does not match the radical and module")
    for x, a in enumerate(s_on_N.actions):
        if is_derivation(N, a) is not None:
            raise IncompatibleActions(f"s-basis element {x + 1} does not act by derivations", index=x + 1)
        b = s_on_W[x]
        if b.shape != (W.dim, W.dim):
            raise IncompatibleActions(f"s-action of element {x + 1} has shape {b.shape}", index=x + 1)
        for n, column in enumerate(a.column_dicts()):
            if b.commutator(W.actions[n]) != W.of_vector(column):
                raise IncompatibleActions(
                    f"s-action of element {x + 1} is not compatible with the module on radical element {n + 1}",
                    index=x + 1,
                )


def _restricted(D: SparseMatrix, source: Nullspace, target: Nullspace) -> SparseMatrix:
    """d restricted to invariants, in coordinates of ``source`` and ``target``.

    Image vectors are invariant, so their coordinates are their values at the
    free columns of ``target``.
    """
    pos = {r: i for i, r in enumerate(target.free)}
    rows = SparseMatrix(len(pos), D.cols, {(pos[r], c): v for (r, c), v in D.entries.items() if r in pos})
    return rows @ source.as_matrix()


def invariant_complex(
    N: LieAlgebra,
    W: Representation,
    s_on_N: Representation,
    s_on_W: Sequence[SparseMatrix],
    max_degree: Optional[int] = None,
    *,
    threads: Optional[int] = None,
) -> InvariantComplex:
    check_compatible(N, W, s_on_N, s_on_W)
    top = N.dim if max_degree is None else min(max_degree, N.dim)
    degrees = list(range(top + 2))

    def basis(k: int) -> Nullspace:
        space = CochainSpace(N.dim, W.dim, k)
        check_cochain_size(space)
        if space.dim == 0:
            return Nullspace(cols=0, free=(), vectors=())
        return invariant_subspace([cochain_action(N, W.dim, a, b, k) for a, b in zip(s_on_N.actions, s_on_W)], space.dim)

    bases = map_ordered(basis, degrees, threads)

    def differential(k: int) -> SparseMatrix:
        if bases[k].dim == 0 or bases[k + 1].dim == 0:
            return SparseMatrix.zeros(bases[k + 1].dim, bases[k].dim)
        return _restricted(ce_differential(N, W, k), bases[k], bases[k + 1])

    differentials = map_ordered(differential, degrees[:-1], threads)
    return InvariantComplex(bases=tuple(bases), differentials=tuple(differentials))


def invariant_cohomology(
    N: LieAlgebra,
    W: Representation,
    s_on_N: Representation,
    s_on_W: Sequence[SparseMatrix],
    degrees: Optional[Iterable[int]] = None,
    *,
    fast: Optional[bool] = None,
    threads: Optional[int] = None,
) -> BettiTable:
    """dim H^k(N, W)^s from the s-invariant subcomplex."""
    degrees = sorted(set(range(N.dim + 1) if degrees is None else degrees))
    top = max(degrees, default=0)
    complex_ = invariant_complex(N, W, s_on_N, s_on_W, top, threads=threads)
    dims = [complex_.dim(k) for k in range(len(complex_.bases))]
    steps = range(len(complex_.differentials))

    def expected_h() -> Dict[int, int]:
        if 0 not in degrees:
            return {}
        return {0: invariant_subspace(list(W.actions) + list(s_on_W), W.dim).dim}

    by_degree = complex_ranks(
        lambda k: complex_.differentials[k], dims, steps,
        fast=fast, threads=threads, label=f"{N.name} invariant", expected_h=expected_h,
    )
    ranks = [by_degree[k] for k in steps]
    rows = betti_rows(dims, ranks, degrees)
    logger.info("H^*(%s, %s)^s in degrees %s: %s", N.name, W.name, degrees, [r.h for r in rows])
    return BettiTable(
        algebra=N.name,
        module=W.name,
        rows=tuple(rows),
        complete=set(range(N.dim + 1)) <= set(degrees),
    )


# ============================================
# g = sl2 ⋉ V_m and its long exact sequence
# ============================================

def les_modules(m: int):
    """(V, s_on_V, [(label, W, s_on_W)]) for the sequence 0 -> V -> g -> g/V -> 0."""
    g = semidirect_product(sl2(), irrep(m), name=f"sl2⋉V_{m}")
    c = g.construction
    V = c.radical
    ad = adjoint_representation(g)
    radical = list(c.radical_indices)
    on_g = restrict(ad, V, radical)
    s_part = restrict(ad, c.levi, c.levi_indices)
    modules = [
        ("V", submodule(on_g, radical, name="V"), submodule(s_part, radical).actions),
        ("g", on_g, s_part.actions),
        ("g/V", quotient_module(on_g, radical, name="g/V"), quotient_module(s_part, radical).actions),
    ]
    return V, c.action, modules


def les_report(m: int, max_degree: Optional[int] = None, *, threads: Optional[int] = None) -> LesReport:
    """Dimensions of H^k(V, V)^s, H^k(V, g)^s, H^k(V, g/V)^s and exactness checks."""
    if m < 1:
        raise RepresentationMismatch("the long exact sequence needs m >= 1")
    V, s_on_V, modules = les_modules(m)
    top = V.dim if max_degree is None else max_degree
    degrees = range(top + 1)
    columns = [invariant_cohomology(V, W, s_on_V, s_on_W, degrees, threads=threads) for _, W, s_on_W in modules]
    rows = tuple(LesRow(k, columns[0][k], columns[1][k], columns[2][k]) for k in degrees)

    failures: List[str] = []
    alternating = 0
    if top >= V.dim:
        alternating = sum((-1) ** r.degree * (r.radical - r.algebra + r.quotient) for r in rows)
        if alternating:
            failures.append(f"alternating sum of the sequence is {alternating}, expected 0")
    if m % 2 == 1:
        by_degree = {r.degree: r for r in rows}
        for k in range(0, top + 1, 2):
            if by_degree[k].radical:
                failures.append(f"H^{k}(V,V)^s = {by_degree[k].radical}, expected 0 for even k")
            nxt = by_degree.get(k + 1)
            if nxt is None:
                continue
            if nxt.quotient:
                failures.append(f"H^{k + 1}(V,g/V)^s = {nxt.quotient}, expected 0")
            identity = by_degree[k].algebra - by_degree[k].quotient + nxt.radical - nxt.algebra
            if identity:
                failures.append(f"four-term sequence starting at degree {k} has Euler sum {identity}")
    for failure in failures:
        logger.warning("les-report m=%d: %s", m, failure)
    return LesReport(m=m, rows=rows, alternating_sum=alternating, failures=tuple(failures))


def hom_cohomology(m: int, k: int, target: str = "V") -> int:
    """dim Hom_s(Λ^k V_m, T) for T = V_m ("V") or T = s = V_2 ("s")."""
    if target not in ("V", "s"):
        raise ValueError(f"target must be 'V' or 's', got {target!r}")
    weight = m if target == "V" else 2
    return hom_dim(exterior_power_decomposition(m, k), Sl2Decomposition.of(weight))
