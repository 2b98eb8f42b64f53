"""
Chevalley-Eilenberg complexes and their exact Betti numbers.

A k-cochain basis element (I, a) is the alternating map sending e_I to the
module basis vector v_a. For J = (j_0 < ... < j_k):

    (dω)(e_J) = Σ_i (-1)^i ρ(e_{j_i}) ω(e_{J \\ j_i})
              + Σ_{p<q} (-1)^{p+q} ω([e_{j_p}, e_{j_q}], e_{J \\ {j_p, j_q}})
"""
import logging
import time
from itertools import combinations
from math import comb
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from liecoh.config import settings
from liecoh.core.exceptions import GuardrailExceeded, ModuleMismatch, NotASemidirectProduct, UnsupportedLevi
from liecoh.core.linalg import SparseMatrix, nullspace, rank
from liecoh.core.pool import map_ordered
from liecoh.models.cohomology import BettiRow, BettiTable, CochainSpace, HochschildSerreResult, betti_rows
from liecoh.models.lie import LieAlgebra, Representation
from liecoh.services.lie import adjoint_representation, derived_subalgebra, outer_derivation_dim

logger = logging.getLogger(__name__)

# dim H^i(sl2, C) for i = 0..3
SL2_TRIVIAL_BETTI = (1, 0, 0, 1)


def check_cochain_size(space: CochainSpace) -> None:
    if space.dim > settings.LIECOH_MAX_COCHAIN_BASIS:
        raise GuardrailExceeded(f"C^{space.degree} basis", space.dim, settings.LIECOH_MAX_COCHAIN_BASIS)


def ce_differential(g: LieAlgebra, M: Representation, k: int) -> SparseMatrix:
    """d_k : C^k(g; M) -> C^{k+1}(g; M) in the lexicographic (subset, coordinate) bases."""
    if M.algebra != g:
        raise ModuleMismatch(f"{M.name or 'module'} is not a module over {g.name}")
    n, d = g.dim, M.dim
    source = CochainSpace(n, d, k)
    target = CochainSpace(n, d, k + 1)
    check_cochain_size(source)
    check_cochain_size(target)
    if source.dim == 0 or target.dim == 0:
        return SparseMatrix.zeros(target.dim, source.dim)

    actions = [A.entries for A in M.actions]
    entries: Dict[Tuple[int, int], object] = {}

    def add(row: int, col: int, value) -> None:
        key = (row, col)
        entries[key] = entries.get(key, 0) + value

    for t, J in enumerate(target.subsets):
        row0 = t * d
        for i, j in enumerate(J):
            I = J[:i] + J[i + 1:]
            col0 = source.subset_index[I] * d
            for (b, a), v in actions[j].items():
                add(row0 + b, col0 + a, -v if i % 2 else v)
        for p, q in combinations(range(len(J)), 2):
            bracket = g.bracket(J[p], J[q])
            if not bracket:
                continue
            rest = J[:p] + J[p + 1:q] + J[q + 1:]
            for s, c in bracket.items():
                if s in rest:
                    continue
                pos = sum(1 for r in rest if r < s)
                I = rest[:pos] + (s,) + rest[pos:]
                coef = c if (p + q + pos) % 2 == 0 else -c
                col0 = source.subset_index[I] * d
                for b in range(d):
                    add(row0 + b, col0 + b, coef)
    return SparseMatrix(target.dim, source.dim, entries)


def _timed_rank(M: SparseMatrix, label: str, fast: bool) -> int:
    started = time.perf_counter()
    r = rank(M, fast=fast)
    logger.info("%s: %dx%d nnz=%d rank=%d (%.1f ms)", label, M.rows, M.cols, M.nnz, r,
                (time.perf_counter() - started) * 1000)
    return r


def rank_problems(ranks: Mapping[int, int], dims: Sequence[int], expected_h: Mapping[int, int]) -> List[str]:
    """Violations of rank-nullity, and cohomology that differs from a known value.

    ``ranks[k]`` is the rank of d_k : C^k -> C^{k+1}, ``dims[k]`` is dim C^k.
    Missing ranks count as 0, which only weakens the checks.
    """
    def dim(k: int) -> int:
        return dims[k] if 0 <= k < len(dims) else 0

    problems = []
    for k, r in sorted(ranks.items()):
        if not 0 <= r <= min(dim(k), dim(k + 1)):
            problems.append(f"rank d_{k} = {r} exceeds the shape {dim(k + 1)}x{dim(k)}")
    for k in range(len(dims)):
        used = ranks.get(k, 0) + ranks.get(k - 1, 0)
        if used > dim(k):
            problems.append(f"rank d_{k} + rank d_{k - 1} = {used} exceeds dim C^{k} = {dim(k)}")
    for k, h in sorted(expected_h.items()):
        computed = dim(k) - ranks.get(k, 0) - ranks.get(k - 1, 0)
        if computed != h:
            problems.append(f"H^{k} = {computed}, independently {h}")
    return problems


def complex_ranks(
    differential: Callable[[int], SparseMatrix],
    dims: Sequence[int],
    needed: Iterable[int],
    *,
    fast: Optional[bool] = None,
    threads: Optional[int] = None,
    label: str = "complex",
    expected_h: Optional[Callable[[], Mapping[int, int]]] = None,
) -> Dict[int, int]:
    """Ranks of d_k for every k in ``needed``.

    Modular ranks are kept only if ``rank_problems`` finds nothing, with
    ``expected_h`` supplying exactly computed dimensions of H^k for the
    degrees it covers. Otherwise every rank is recomputed exactly.
    """
    needed = sorted(set(needed))
    fast = settings.LIECOH_FAST_RANK if fast is None else fast

    def compute(use_fast: bool) -> Dict[int, int]:
        def one(k: int) -> int:
            return _timed_rank(differential(k), f"{label} d_{k}", use_fast)

        return dict(zip(needed, map_ordered(one, needed, threads)))

    ranks = compute(fast)
    if fast:
        problems = rank_problems(ranks, dims, expected_h() if expected_h is not None else {})
        if problems:
            logger.warning("modular ranks for %s rejected (%s); recomputing exactly", label, "; ".join(problems))
            ranks = compute(False)
    return ranks


def _table(g_name: str, m_name: str, n: int, d: int, degrees: List[int], ranks: Dict[int, int]) -> BettiTable:
    dims = [comb(n, k) * d for k in range(n + 1)]
    dense_ranks = [ranks.get(k, 0) for k in range(n + 1)]
    rows = betti_rows(dims, dense_ranks, degrees)
    complete = set(range(n + 1)) <= set(degrees)
    return BettiTable(algebra=g_name, module=m_name, rows=tuple(rows), complete=complete)


def module_invariants_dim(M: Representation) -> int:
    """dim M^g, the joint kernel of the action matrices."""
    if not M.actions:
        return M.dim
    return nullspace(SparseMatrix.vstack(list(M.actions), cols=M.dim)).dim


def _expected_h(g: LieAlgebra, M: Representation, degrees: List[int]) -> Dict[int, int]:
    """H^0 as invariants. H^1 from g/[g, g] for trivial modules and from outer derivations for the adjoint module."""
    known = {}
    if 0 in degrees:
        known[0] = module_invariants_dim(M)
    if 1 in degrees:
        if all(A.is_zero() for A in M.actions):
            known[1] = M.dim * (g.dim - len(derived_subalgebra(g)))
        elif list(M.actions) == list(adjoint_representation(g).actions):
            known[1] = outer_derivation_dim(g)
    return known


def betti_numbers(
    g: LieAlgebra,
    M: Representation,
    degrees: Optional[Iterable[int]] = None,
    *,
    fast: Optional[bool] = None,
    threads: Optional[int] = None,
) -> BettiTable:
    """dim H^k(g; M) for the requested degrees (default 0..dim g)."""
    if M.algebra != g:
        raise ModuleMismatch(f"{M.name or 'module'} is not a module over {g.name}")
    n = g.dim
    degrees = sorted(set(range(n + 1) if degrees is None else degrees))
    needed = [j for j in range(n) if j in degrees or j + 1 in degrees]
    ranks = complex_ranks(
        lambda k: ce_differential(g, M, k),
        [comb(n, k) * M.dim for k in range(n + 1)],
        needed,
        fast=fast,
        threads=threads,
        label=g.name,
        expected_h=lambda: _expected_h(g, M, degrees),
    )
    return _table(g.name, M.name, n, M.dim, degrees, ranks)


def adjoint_betti_numbers(g: LieAlgebra, degrees: Optional[Iterable[int]] = None, **kwargs) -> BettiTable:
    return betti_numbers(g, adjoint_representation(g), degrees, **kwargs)


# ============================================
# Hochschild-Serre
# ============================================

def hochschild_serre_adjoint(
    g: LieAlgebra,
    degrees: Optional[Iterable[int]] = None,
    *,
    verify_degrees: Iterable[int] = (0, 1, 2),
    fast: Optional[bool] = None,
    threads: Optional[int] = None,
) -> HochschildSerreResult:
    """H^k(g, g) = H^k(N, g)^s ⊕ H^{k-3}(N, g)^s for g = sl2 ⋉ N.

    The degrees in ``verify_degrees`` are also computed directly; any
    disagreement is logged and returned, never silently dropped.
    """
    # Local import: invariants builds on this module.
    from liecoh.services.invariants import invariant_cohomology
    from liecoh.services.lie import restrict
    from liecoh.services.sl2 import is_sl2

    construction = g.construction
    if construction is None:
        raise NotASemidirectProduct(f"{g.name} carries no levi/radical construction")
    if not is_sl2(construction.levi):
        raise UnsupportedLevi(f"levi factor of {g.name} is {construction.levi.name}, not sl2")

    degrees = sorted(set(range(g.dim + 1) if degrees is None else degrees))
    top = max(degrees, default=0)
    ad = adjoint_representation(g)
    N = construction.radical
    W = restrict(ad, N, construction.radical_indices)
    s_on_W = [ad.actions[i] for i in construction.levi_indices]
    invariant = invariant_cohomology(
        N, W, construction.action, s_on_W, range(min(top, N.dim) + 1), fast=fast, threads=threads
    )

    def inv(j: int) -> int:
        return invariant[j] if 0 <= j <= N.dim and j <= top else 0

    rows = []
    for k in degrees:
        h = sum(SL2_TRIVIAL_BETTI[i] * inv(k - i) for i in range(4))
        rows.append(BettiRow(degree=k, cochain_dim=comb(g.dim, k) * g.dim if k <= g.dim else 0, rank=None, h=h))
    table = BettiTable(algebra=g.name, module=ad.name, rows=tuple(rows),
                       complete=set(range(g.dim + 1)) <= set(degrees))

    verify = sorted(set(verify_degrees) & set(degrees))
    disagreements = []
    if verify:
        direct = betti_numbers(g, ad, verify, fast=fast, threads=threads)
        for k in verify:
            if direct[k] != table[k]:
                logger.warning("Hochschild-Serre gives H^%d(%s) = %d, direct computation %d",
                               k, g.name, table[k], direct[k])
                disagreements.append((k, table[k], direct[k]))
    return HochschildSerreResult(
        table=table,
        invariant_table=invariant,
        verified_degrees=tuple(verify),
        disagreements=tuple(disagreements),
    )
