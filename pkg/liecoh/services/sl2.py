"""
sl2(C), its irreducible modules V_m and weight bookkeeping.

Basis of sl2: e1, e2, e3 with [e1, e2] = e3, [e1, e3] = -2 e1, [e2, e3] = 2 e2.
On V_m (basis v_0..v_m): e1 v_i = i v_{i-1}, e2 v_i = (m - i) v_{i+1},
e3 v_i = (m - 2i) v_i.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, combinations
from typing import Dict, List, Literal, Tuple

from liecoh.core.exceptions import NotAModule, NotWeightDiagonalizable
from liecoh.core.linalg import SparseMatrix, nullspace, rank
from liecoh.models.lie import Construction, LieAlgebra, Representation
from liecoh.models.weights import Sl2Decomposition, WeightMultiset
from liecoh.services.lie import rep_direct_sum, validate_lie_algebra, zero_algebra

Parity = Literal["symmetric", "antisymmetric"]

SL2_BRACKETS = {
    (0, 1): {2: 1},
    (0, 2): {0: -2},
    (1, 2): {1: 2},
}


@lru_cache(maxsize=None)
def sl2() -> LieAlgebra:
    """sl2 carrying a trivial construction (levi = sl2, radical = 0)."""
    plain = validate_lie_algebra(3, SL2_BRACKETS, "sl2")
    empty = SparseMatrix.zeros(0, 0)
    construction = Construction(
        levi=plain,
        radical=zero_algebra(),
        action=Representation(plain, 0, (empty, empty, empty), name="0"),
        levi_indices=(0, 1, 2),
        radical_indices=(),
    )
    return LieAlgebra(3, "sl2", plain.brackets, construction)


def is_sl2(g: LieAlgebra) -> bool:
    """True when g has literally the sl2 structure constants above."""
    return g == sl2()


@lru_cache(maxsize=None)
def irrep(m: int) -> Representation:
    if m < 0:
        raise ValueError("highest weight must be nonnegative")
    e1 = SparseMatrix(m + 1, m + 1, {(i - 1, i): i for i in range(1, m + 1)})
    e2 = SparseMatrix(m + 1, m + 1, {(i + 1, i): m - i for i in range(m)})
    e3 = SparseMatrix(m + 1, m + 1, {(i, i): m - 2 * i for i in range(m + 1)})
    return Representation(sl2(), m + 1, (e1, e2, e3), name=f"V_{m}")


def sl2_module(*highest_weights: int) -> Representation:
    """V_{a} ⊕ V_{b} ⊕ ... in the order given."""
    reps = [irrep(m) for m in highest_weights]
    if len(reps) == 1:
        return reps[0]
    if not reps:
        empty = SparseMatrix.zeros(0, 0)
        return Representation(sl2(), 0, (empty, empty, empty), name="0")
    return rep_direct_sum(*reps, name="+".join(r.name for r in reps))


# ============================================
# Weights and decompositions
# ============================================

def weight_multiplicities(rho: Representation) -> WeightMultiset:
    H = rho.actions[2]
    d = rho.dim
    if all(r == c for r, c in H.entries):
        counts: Dict[int, int] = {}
        for i in range(d):
            value = H[(i, i)]
            if value.denominator != 1:
                raise NotWeightDiagonalizable(0, d)
            counts[int(value)] = counts.get(int(value), 0) + 1
        return WeightMultiset(counts)
    counts = {}
    identity = SparseMatrix.identity(d)
    for weight in range(-d, d + 1):
        mult = d - rank(H - identity.scale(weight), fast=False)
        if mult:
            counts[weight] = mult
    found = sum(counts.values())
    if found != d:
        raise NotWeightDiagonalizable(found, d)
    return WeightMultiset(counts)


def decompose(w: WeightMultiset) -> Sl2Decomposition:
    """Peel highest weights: mult(V_k) = w(k) - w(k+2)."""
    top = max((abs(k) for k in w.multiplicities), default=-1)
    mults: Dict[int, int] = {}
    for k in range(top, -1, -1):
        mult = w[k] - w[k + 2]
        if mult < 0:
            raise NotAModule(k, mult)
        if mult:
            mults[k] = mult
    result = Sl2Decomposition(mults)
    rebuilt = result.weights()
    for weight in sorted(set(w.multiplicities) | set(rebuilt.multiplicities)):
        if w[weight] != rebuilt[weight]:
            raise NotAModule(abs(weight), w[weight] - rebuilt[weight])
    return result


def decompose_representation(rho: Representation) -> Sl2Decomposition:
    return decompose(weight_multiplicities(rho))


def hom_dim(a: Sl2Decomposition, b: Sl2Decomposition) -> int:
    return sum(mult * b[m] for m, mult in a.items())


def clebsch_gordan(a: int, b: int) -> Sl2Decomposition:
    return Sl2Decomposition.of(*range(a + b, abs(a - b) - 1, -2))


# ============================================
# Invariant forms
# ============================================

def invariant_bilinear_forms(rho: Representation, parity: Parity = "antisymmetric") -> List[SparseMatrix]:
    """Basis of forms B with rho(x)^T B + B rho(x) = 0 of the given parity.

    B is determined by its entries B[u][v] for u < v (antisymmetric) or
    u <= v (symmetric); those are the unknowns of one linear system.
    """
    d = rho.dim
    pairs = list(combinations(range(d), 2)) if parity == "antisymmetric" else list(combinations_with_replacement(range(d), 2))
    unknown = {p: i for i, p in enumerate(pairs)}
    sign = -1 if parity == "antisymmetric" else 1

    def entry(t: int, c: int):
        if t == c and parity == "antisymmetric":
            return None
        if t <= c:
            return unknown[(t, c)], 1
        return unknown[(c, t)], sign

    rows: List[Dict[int, Fraction]] = []
    for A in rho.actions:
        columns = A.column_dicts()
        for r in range(d):
            for c in range(d):
                eq: Dict[int, Fraction] = {}
                # (A^T B)[r][c] = sum_t A[t][r] B[t][c]
                for t, v in columns[r].items():
                    slot = entry(t, c)
                    if slot:
                        eq[slot[0]] = eq.get(slot[0], 0) + slot[1] * v
                # (B A)[r][c] = sum_t B[r][t] A[t][c]
                for t, v in columns[c].items():
                    slot = entry(r, t)
                    if slot:
                        eq[slot[0]] = eq.get(slot[0], 0) + slot[1] * v
                eq = {k: v for k, v in eq.items() if v}
                if eq:
                    rows.append(eq)
    ns = nullspace(SparseMatrix.from_rows(len(pairs), rows))
    forms = []
    for vec in ns.vectors:
        entries: Dict[Tuple[int, int], Fraction] = {}
        for idx, v in vec.items():
            u, w = pairs[idx]
            entries[(u, w)] = v
            if u != w:
                entries[(w, u)] = sign * v
        forms.append(SparseMatrix(d, d, entries))
    return forms


def symplectic_form(m: int) -> SparseMatrix:
    """The invariant symplectic form on V_m (m odd), normalized to omega[0][m] = 1."""
    forms = invariant_bilinear_forms(irrep(m), "antisymmetric")
    if len(forms) != 1:
        raise ValueError(f"V_{m} carries {len(forms)} independent invariant antisymmetric forms, expected 1")
    omega = forms[0]
    return omega.scale(1 / omega[(0, m)])
