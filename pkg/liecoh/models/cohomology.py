from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from liecoh.core.linalg import Nullspace, SparseMatrix


@dataclass(frozen=True)
class CochainSpace:
    """C^k(g; M) with basis (k-subset, module coordinate).

    Subsets of ``range(algebra_dim)`` are enumerated in lexicographic order;
    the index of ``(I, a)`` is ``subset_index(I) * module_dim + a``.
    """

    algebra_dim: int
    module_dim: int
    degree: int

    @cached_property
    def subsets(self) -> Tuple[Tuple[int, ...], ...]:
        if self.degree < 0:
            return ()
        return tuple(combinations(range(self.algebra_dim), self.degree))

    @cached_property
    def subset_index(self) -> Dict[Tuple[int, ...], int]:
        return {s: i for i, s in enumerate(self.subsets)}

    @property
    def dim(self) -> int:
        if self.degree < 0 or self.degree > self.algebra_dim:
            return 0
        return comb(self.algebra_dim, self.degree) * self.module_dim

    def index(self, subset: Tuple[int, ...], coordinate: int) -> int:
        return self.subset_index[subset] * self.module_dim + coordinate

    def basis_label(self, index: int) -> Tuple[Tuple[int, ...], int]:
        s, a = divmod(index, self.module_dim)
        return self.subsets[s], a


@dataclass(frozen=True)
class BettiRow:
    degree: int
    cochain_dim: int
    rank: Optional[int]  # rank of d_k : C^k -> C^{k+1}; None when assembled indirectly
    h: int


@dataclass(frozen=True)
class BettiTable:
    algebra: str
    module: str
    rows: Tuple[BettiRow, ...]
    complete: bool = False  # rows cover every degree 0..dim of the algebra

    def __getitem__(self, degree: int) -> int:
        for row in self.rows:
            if row.degree == degree:
                return row.h
        raise KeyError(degree)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(r.degree for r in self.rows)

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(r.h for r in self.rows)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** r.degree * r.h for r in self.rows)

    @property
    def cochain_euler_characteristic(self) -> int:
        return sum((-1) ** r.degree * r.cochain_dim for r in self.rows)

    def nonzero_degrees(self) -> Tuple[int, ...]:
        return tuple(r.degree for r in self.rows if r.h)


@dataclass(frozen=True)
class InvariantComplex:
    """s-invariant subcomplex of C^*(N; W).

    ``bases[k]`` spans the invariants in C^k (coordinates in the full cochain
    basis); ``differentials[k]`` is d_k restricted to the invariants, written
    in the bases of degree k and k+1.
    """

    bases: Tuple[Nullspace, ...]
    differentials: Tuple[SparseMatrix, ...] = field(repr=False)

    def dim(self, degree: int) -> int:
        return self.bases[degree].dim if 0 <= degree < len(self.bases) else 0


@dataclass(frozen=True)
class HochschildSerreResult:
    """H^k(g, g) assembled as H^k(N, g)^s ⊕ H^{k-3}(N, g)^s."""

    table: BettiTable
    invariant_table: BettiTable
    verified_degrees: Tuple[int, ...] = ()
    disagreements: Tuple[Tuple[int, int, int], ...] = ()  # (degree, assembled, direct)

    @property
    def agrees(self) -> bool:
        return not self.disagreements


@dataclass(frozen=True)
class LesRow:
    degree: int
    radical: int  # H^k(V, V)^s
    algebra: int  # H^k(V, g)^s
    quotient: int  # H^k(V, g/V)^s


@dataclass(frozen=True)
class LesReport:
    m: int
    rows: Tuple[LesRow, ...]
    alternating_sum: int
    failures: Tuple[str, ...] = ()

    @property
    def exact(self) -> bool:
        return not self.failures

    def row(self, degree: int) -> Optional[LesRow]:
        for r in self.rows:
            if r.degree == degree:
                return r
        return None


def betti_rows(dims: Sequence[int], ranks: Sequence[int], degrees: Sequence[int]) -> List[BettiRow]:
    """Rows for ``degrees`` given cochain dims and ranks indexed by degree (d_{-1} = 0)."""
    out = []
    for k in degrees:
        rk = ranks[k] if 0 <= k < len(ranks) else 0
        prev = ranks[k - 1] if 1 <= k <= len(ranks) else 0
        dim = dims[k] if 0 <= k < len(dims) else 0
        out.append(BettiRow(degree=k, cochain_dim=dim, rank=rk, h=dim - rk - prev))
    return out
