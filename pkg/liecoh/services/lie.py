"""
Lie algebras from structure constants and the constructions used to build
perfect algebras s ⋉ N: direct sums, semidirect products with modules and
with nilpotent algebras acted on by derivations, Heisenberg algebras from
invariant forms and free nilpotent algebras.
"""
import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from liecoh.core.exceptions import (
    DimensionMismatch,
    JacobiViolation,
    NotADerivation,
    NotAntisymmetric,
    NotInvariant,
    RepresentationMismatch,
    UnsupportedClass,
    UnsupportedRank,
)
from liecoh.core.linalg import SparseMatrix, nullspace, row_space_basis, to_rational
from liecoh.models.lie import Construction, LieAlgebra, Representation, Vector

logger = logging.getLogger(__name__)

RawVector = Union[Mapping[int, object], Sequence[object]]


class NilpotencyResult(NamedTuple):
    nilpotent: bool
    nil_class: Optional[int]


# ============================================
# Validation
# ============================================

def _coefficients(raw: RawVector, dim: int, pair: Tuple[int, int], one_based: bool) -> Dict[int, Fraction]:
    if isinstance(raw, Mapping):
        shift = 1 if one_based else 0
        out = {}
        for k, v in raw.items():
            idx = int(k) - shift
            if not 0 <= idx < dim:
                raise DimensionMismatch(f"coefficient index {k} out of range in bracket {pair}")
            out[idx] = to_rational(v)
        return out
    if len(raw) != dim:
        raise DimensionMismatch(f"coefficient vector of bracket {pair} has length {len(raw)}, expected {dim}")
    return {k: to_rational(v) for k, v in enumerate(raw) if v}


def jacobi_defect(g: LieAlgebra, i: int, j: int, k: int) -> Dict[int, Fraction]:
    total: Dict[int, Fraction] = {}
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        term = g.bracket_vectors({a: Fraction(1)}, g.bracket(b, c))
        for idx, v in term.items():
            total[idx] = total.get(idx, 0) + v
    return {idx: v for idx, v in total.items() if v}


def check_jacobi(g: LieAlgebra) -> List[Tuple[Tuple[int, int, int], Tuple[Fraction, ...]]]:
    """Every failed Jacobi triple (1-based) with its dense defect vector."""
    report = []
    for i, j, k in combinations(range(g.dim), 3):
        defect = jacobi_defect(g, i, j, k)
        if defect:
            dense = tuple(defect.get(n, Fraction(0)) for n in range(g.dim))
            report.append(((i + 1, j + 1, k + 1), dense))
    return report


def validate_lie_algebra(
    dim: int,
    brackets: Mapping[Tuple[int, int], RawVector],
    name: str = "g",
    *,
    one_based: bool = False,
    construction: Optional[Construction] = None,
) -> LieAlgebra:
    """Build a LieAlgebra and check it; raises JacobiViolation listing every failed triple."""
    shift = 1 if one_based else 0
    table: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for (i, j), raw in brackets.items():
        a, b = int(i) - shift, int(j) - shift
        if not (0 <= a < dim and 0 <= b < dim):
            raise DimensionMismatch(f"bracket index {(i, j)} outside dimension {dim}")
        if a == b:
            raise DimensionMismatch(f"bracket {(i, j)} of a basis element with itself")
        vec = _coefficients(raw, dim, (i, j), one_based)
        if a > b:
            a, b = b, a
            vec = {k: -v for k, v in vec.items()}
        if (a, b) in table:
            raise DimensionMismatch(f"bracket {(i, j)} given twice")
        table[(a, b)] = vec
    g = LieAlgebra(dim, name, table, construction)
    violations = check_jacobi(g)
    if violations:
        raise JacobiViolation(violations)
    return g


def check_homomorphism(rep: Representation) -> None:
    """Raise RepresentationMismatch unless rho([e_i, e_j]) = [rho(e_i), rho(e_j)] for all pairs."""
    g = rep.algebra
    for i, j in combinations(range(g.dim), 2):
        lhs = rep.of_vector(g.bracket(i, j))
        if lhs != rep.actions[i].commutator(rep.actions[j]):
            raise RepresentationMismatch(
                f"{rep.name or 'representation'} violates the homomorphism law on ({i + 1}, {j + 1})",
                pair=(i + 1, j + 1),
            )


def is_derivation(g: LieAlgebra, D: SparseMatrix) -> Optional[Tuple[int, int]]:
    """None if D is a derivation of g, else the first failing pair (1-based)."""
    columns = D.column_dicts()
    for i, j in combinations(range(g.dim), 2):
        lhs = D.apply(g.bracket(i, j))
        rhs = g.bracket_vectors(columns[i], {j: Fraction(1)})
        for k, v in g.bracket_vectors({i: Fraction(1)}, columns[j]).items():
            rhs[k] = rhs.get(k, 0) + v
        if any(lhs[k] != rhs.get(k, 0) for k in range(g.dim)):
            return (i + 1, j + 1)
    return None


# ============================================
# Basic algebras and modules
# ============================================

def abelian(dim: int, name: Optional[str] = None) -> LieAlgebra:
    return LieAlgebra(dim, name or f"a_{dim}", {})


def zero_algebra() -> LieAlgebra:
    return LieAlgebra(0, "0", {})


def adjoint_representation(g: LieAlgebra) -> Representation:
    actions = []
    for i in range(g.dim):
        entries = {}
        for j in range(g.dim):
            for k, c in g.bracket(i, j).items():
                entries[(k, j)] = c
        actions.append(SparseMatrix(g.dim, g.dim, entries))
    return Representation(g, g.dim, tuple(actions), name=f"ad({g.name})")


def trivial_module(g: LieAlgebra, dim: int = 1) -> Representation:
    zero = SparseMatrix.zeros(dim, dim)
    return Representation(g, dim, tuple(zero for _ in range(g.dim)), name="C" if dim == 1 else f"C^{dim}")


def rep_direct_sum(*reps: Representation, name: Optional[str] = None) -> Representation:
    if not reps:
        raise DimensionMismatch("direct sum of no representations")
    g = reps[0].algebra
    if any(r.algebra != g for r in reps):
        raise RepresentationMismatch("direct summands act through different algebras")
    total = sum(r.dim for r in reps)
    actions = []
    for i in range(g.dim):
        entries = {}
        offset = 0
        for r in reps:
            for (a, b), v in r.actions[i].entries.items():
                entries[(a + offset, b + offset)] = v
            offset += r.dim
        actions.append(SparseMatrix(total, total, entries))
    label = name or "+".join(r.name or f"M{r.dim}" for r in reps)
    return Representation(g, total, tuple(actions), name=label)


def tensor_product(left: Representation, right: Representation) -> Representation:
    """rho(x) = A(x) ⊗ 1 + 1 ⊗ B(x), basis index a * dim(right) + b."""
    if left.algebra != right.algebra:
        raise RepresentationMismatch("tensor factors act through different algebras")
    d1, d2 = left.dim, right.dim
    actions = []
    for A, B in zip(left.actions, right.actions):
        entries: Dict[Tuple[int, int], Fraction] = {}
        for (a, a2), v in A.entries.items():
            for b in range(d2):
                key = (a * d2 + b, a2 * d2 + b)
                entries[key] = entries.get(key, 0) + v
        for (b, b2), v in B.entries.items():
            for a in range(d1):
                key = (a * d2 + b, a * d2 + b2)
                entries[key] = entries.get(key, 0) + v
        actions.append(SparseMatrix(d1 * d2, d1 * d2, entries))
    return Representation(left.algebra, d1 * d2, tuple(actions), name=f"{left.name}⊗{right.name}")


def dual(rep: Representation) -> Representation:
    return Representation(rep.algebra, rep.dim, tuple(-A.T for A in rep.actions), name=f"{rep.name}*")


def exterior_power_matrix(A: SparseMatrix, k: int, subsets: Optional[Sequence[Tuple[int, ...]]] = None) -> SparseMatrix:
    """The derivation induced by A on Λ^k, basis = lexicographic k-subsets."""
    n = A.rows
    if subsets is None:
        subsets = list(combinations(range(n), k))
    index = {s: i for i, s in enumerate(subsets)}
    columns = A.column_dicts()
    entries: Dict[Tuple[int, int], Fraction] = {}
    for col, subset in enumerate(subsets):
        for p, i in enumerate(subset):
            rest = subset[:p] + subset[p + 1:]
            for t, v in columns[i].items():
                if t in rest:
                    continue
                q = sum(1 for r in rest if r < t)
                target = rest[:q] + (t,) + rest[q:]
                sign = -v if (p - q) % 2 else v
                key = (index[target], col)
                entries[key] = entries.get(key, 0) + sign
    size = len(subsets)
    return SparseMatrix(size, size, entries)


def exterior_power(rep: Representation, k: int) -> Representation:
    subsets = list(combinations(range(rep.dim), k))
    actions = tuple(exterior_power_matrix(A, k, subsets) for A in rep.actions)
    return Representation(rep.algebra, len(subsets), actions, name=f"Λ^{k}({rep.name})")


def restrict(rep: Representation, sub: LieAlgebra, indices: Sequence[int]) -> Representation:
    """Restrict ``rep`` to the subalgebra spanned by the basis elements ``indices``."""
    if len(indices) != sub.dim:
        raise DimensionMismatch("restriction needs one index per subalgebra basis element")
    return Representation(sub, rep.dim, tuple(rep.actions[i] for i in indices), name=f"{rep.name}|{sub.name}")


def _coordinate_block(A: SparseMatrix, rows: Sequence[int], cols: Sequence[int]) -> SparseMatrix:
    r_pos = {r: i for i, r in enumerate(rows)}
    c_pos = {c: i for i, c in enumerate(cols)}
    entries = {(r_pos[r], c_pos[c]): v for (r, c), v in A.entries.items() if r in r_pos and c in c_pos}
    return SparseMatrix(len(rows), len(cols), entries)


def submodule(rep: Representation, indices: Sequence[int], name: Optional[str] = None) -> Representation:
    """The submodule spanned by the coordinate vectors ``indices`` (must be invariant)."""
    inside = set(indices)
    for i, A in enumerate(rep.actions):
        if any(c in inside and r not in inside for (r, c) in A.entries):
            raise RepresentationMismatch(f"coordinate span is not invariant under e_{i + 1}")
    idx = list(indices)
    return Representation(rep.algebra, len(idx), tuple(_coordinate_block(A, idx, idx) for A in rep.actions),
                          name=name or f"sub({rep.name})")


def quotient_module(rep: Representation, indices: Sequence[int], name: Optional[str] = None) -> Representation:
    """``rep`` modulo the invariant coordinate span of ``indices``."""
    submodule(rep, indices)
    drop = set(indices)
    keep = [i for i in range(rep.dim) if i not in drop]
    return Representation(rep.algebra, len(keep), tuple(_coordinate_block(A, keep, keep) for A in rep.actions),
                          name=name or f"{rep.name}/sub")


# ============================================
# Structure
# ============================================

def center(g: LieAlgebra) -> List[Dict[int, Fraction]]:
    """Basis of Z(g) = joint kernel of all ad(e_i)."""
    ad = adjoint_representation(g)
    ns = nullspace(SparseMatrix.vstack(list(ad.actions), cols=g.dim)) if g.dim else None
    if ns is None:
        return []
    return [dict(v) for v in ns.vectors]


def derived_subalgebra(g: LieAlgebra) -> List[Dict[int, Fraction]]:
    return row_space_basis(vec for _, _, vec in g.nonzero_brackets())


def is_perfect(g: LieAlgebra) -> bool:
    return len(derived_subalgebra(g)) == g.dim


def lower_central_series(g: LieAlgebra) -> List[List[Dict[int, Fraction]]]:
    """Bases of g = C^1 ⊇ C^2 = [g, g] ⊇ ... until the dimension stops dropping."""
    current = [{i: Fraction(1)} for i in range(g.dim)]
    series = [current]
    for _ in range(g.dim):
        nxt = row_space_basis(
            g.bracket_vectors({j: Fraction(1)}, vec) for j in range(g.dim) for vec in current
        )
        if len(nxt) == len(current):
            break
        series.append(nxt)
        current = nxt
        if not current:
            break
    return series


def is_nilpotent(g: LieAlgebra) -> NilpotencyResult:
    series = lower_central_series(g)
    if series[-1]:
        return NilpotencyResult(False, None)
    return NilpotencyResult(True, len(series) - 1)


def derivations(g: LieAlgebra) -> List[SparseMatrix]:
    """Basis of Der(g): D[x, y] = [Dx, y] + [x, Dy] as one sparse linear system.

    Unknown D_{t,i} (coefficient of e_t in D e_i) sits at column t * n + i.
    """
    n = g.dim
    rows: List[Dict[int, Fraction]] = []
    for i, j in combinations(range(n), 2):
        eqs: Dict[int, Dict[int, Fraction]] = {}

        def add(k: int, col: int, v: Fraction) -> None:
            row = eqs.setdefault(k, {})
            row[col] = row.get(col, 0) + v

        for s, c in g.bracket(i, j).items():
            for k in range(n):
                add(k, k * n + s, c)
        for t in range(n):
            for k, c in g.bracket(t, j).items():
                add(k, t * n + i, -c)
            for k, c in g.bracket(i, t).items():
                add(k, t * n + j, -c)
        for row in eqs.values():
            cleaned = {col: v for col, v in row.items() if v}
            if cleaned:
                rows.append(cleaned)
    ns = nullspace(SparseMatrix.from_rows(n * n, rows))
    return [SparseMatrix(n, n, {divmod(idx, n): v for idx, v in vec.items()}) for vec in ns.vectors]


def outer_derivation_dim(g: LieAlgebra) -> int:
    """dim Der(g) - dim ad(g), where dim ad(g) = dim g - dim Z(g)."""
    return len(derivations(g)) - (g.dim - len(center(g)))


# ============================================
# Constructions
# ============================================

def _shifted(brackets, offset: int) -> Dict[Tuple[int, int], Dict[int, Fraction]]:
    return {(i + offset, j + offset): {k + offset: v for k, v in vec.items()} for (i, j), vec in brackets.items()}


def _block_action(levi_size: int, blocks: Sequence[Tuple[int, Sequence[SparseMatrix]]], total: int) -> List[SparseMatrix]:
    """Actions of a direct-sum levi on a direct-sum radical, each block at its offset."""
    actions: List[SparseMatrix] = []
    for offset, mats in blocks:
        for A in mats:
            actions.append(SparseMatrix(total, total, {(r + offset, c + offset): v for (r, c), v in A.entries.items()}))
    if len(actions) != levi_size:
        raise DimensionMismatch(f"{len(actions)} block actions for a levi factor of dimension {levi_size}")
    return actions


def direct_sum(g: LieAlgebra, h: LieAlgebra, name: Optional[str] = None) -> LieAlgebra:
    table = {k: dict(v) for k, v in g.brackets.items()}
    table.update(_shifted(h.brackets, g.dim))
    construction = None
    if g.construction is not None and h.construction is not None:
        cg, ch = g.construction, h.construction
        levi = direct_sum(cg.levi, ch.levi)
        radical = direct_sum(cg.radical, ch.radical)
        actions = _block_action(
            levi.dim, [(0, cg.action.actions), (cg.radical.dim, ch.action.actions)], radical.dim
        )
        construction = Construction(
            levi=levi,
            radical=radical,
            action=Representation(levi, radical.dim, tuple(actions), name="levi action"),
            levi_indices=cg.levi_indices + tuple(g.dim + i for i in ch.levi_indices),
            radical_indices=cg.radical_indices + tuple(g.dim + i for i in ch.radical_indices),
        )
    if h.dim == 0:
        label = name or g.name
    elif g.dim == 0:
        label = name or h.name
    else:
        label = name or f"{g.name}+{h.name}"
    return validate_lie_algebra(g.dim + h.dim, table, label, construction=construction)


def semidirect_by_derivations(
    s: LieAlgebra, N: LieAlgebra, action: Representation, name: Optional[str] = None
) -> LieAlgebra:
    """s ⋉ N with [x, n] = action(x) n; basis ordered s first, then N."""
    if action.algebra != s or action.dim != N.dim:
        raise RepresentationMismatch("action must be a representation of s on the underlying space of N")
    check_homomorphism(action)
    for i, D in enumerate(action.actions):
        failed = is_derivation(N, D)
        if failed is not None:
            raise NotADerivation(i + 1, failed)
    offset = s.dim
    table = {k: dict(v) for k, v in s.brackets.items()}
    table.update(_shifted(N.brackets, offset))
    for a, D in enumerate(action.actions):
        for b, col in enumerate(D.column_dicts()):
            if col:
                table[(a, offset + b)] = {offset + c: v for c, v in col.items()}
    levi = LieAlgebra(s.dim, s.name, s.brackets)
    construction = Construction(
        levi=levi,
        radical=N,
        action=Representation(levi, N.dim, action.actions, name=action.name),
        levi_indices=tuple(range(s.dim)),
        radical_indices=tuple(range(offset, offset + N.dim)),
    )
    g = validate_lie_algebra(s.dim + N.dim, table, name or f"{s.name}⋉{N.name}", construction=construction)
    logger.debug("built %s of dimension %d", g.name, g.dim)
    return g


def semidirect_product(s: LieAlgebra, rho: Representation, name: Optional[str] = None) -> LieAlgebra:
    """s ⋉ V for a module V, V abelian: [(X, v), (Y, u)] = ([X, Y], Xu - Yv)."""
    if rho.algebra != s:
        raise RepresentationMismatch("representation does not act through s")
    return semidirect_by_derivations(s, abelian(rho.dim, rho.name or None), rho, name=name or f"{s.name}⋉{rho.name}")


def heisenberg_from_symplectic(
    rho: Representation, omega: Union[SparseMatrix, Sequence[Sequence[object]]], name: Optional[str] = None
) -> Tuple[LieAlgebra, Representation]:
    """N = V ⊕ Cz with [u, v] = omega(u, v) z, and rho extended by zero on z.

    omega may be degenerate; the radical of omega then splits off as an
    abelian factor.
    """
    if not isinstance(omega, SparseMatrix):
        omega = SparseMatrix.from_dense(omega)
    d = rho.dim
    if omega.shape != (d, d):
        raise DimensionMismatch(f"form of shape {omega.shape} on a {d}-dimensional module")
    if omega.T != -omega:
        raise NotAntisymmetric("bilinear form is not antisymmetric")
    for i, A in enumerate(rho.actions):
        if not (A.T @ omega + omega @ A).is_zero():
            raise NotInvariant(i + 1)
    z = d
    table = {}
    for a, b in combinations(range(d), 2):
        value = omega[(a, b)]
        if value:
            table[(a, b)] = {z: value}
    N = validate_lie_algebra(d + 1, table, name or f"n_{d + 1}")
    actions = tuple(SparseMatrix(d + 1, d + 1, A.entries) for A in rho.actions)
    return N, Representation(rho.algebra, d + 1, actions, name=f"{rho.name}+C")


def extend_to_derivations(
    N: LieAlgebra, generator_action: Representation, words: Mapping[int, Tuple[int, int]]
) -> Representation:
    """Extend an action on the generators of N to derivations of N.

    Basis elements not among the generators are given as ``words[idx] = (p, q)``
    meaning e_idx = [e_p, e_q] with p, q < idx; D e_idx = [D e_p, e_q] + [e_p, D e_q].
    """
    r = generator_action.dim
    if r + len(words) != N.dim:
        raise DimensionMismatch("generators and words do not cover the basis")
    actions = []
    for A in generator_action.actions:
        cols: Dict[int, Dict[int, Fraction]] = {i: col for i, col in enumerate(A.column_dicts())}
        for idx in sorted(words):
            p, q = words[idx]
            image = N.bracket_vectors(cols[p], {q: Fraction(1)})
            for k, v in N.bracket_vectors({p: Fraction(1)}, cols[q]).items():
                image[k] = image.get(k, 0) + v
            cols[idx] = {k: v for k, v in image.items() if v}
        actions.append(SparseMatrix.from_columns(N.dim, [cols[i] for i in range(N.dim)]))
    return Representation(generator_action.algebra, N.dim, tuple(actions), name=f"induced({generator_action.name})")


def free_nilpotent(
    generators: Representation, nil_class: int, name: Optional[str] = None
) -> Tuple[LieAlgebra, Representation]:
    """Free nilpotent algebra f_{r,c} on the generator module, with the induced action.

    Class 2: basis = generators, then u_a ∧ u_b for a < b (lexicographic).
    Class 3 on two generators: Hall basis x, y, z = [x, y], [x, z], [y, z].
    """
    r = generators.dim
    if nil_class not in (2, 3):
        raise UnsupportedClass(nil_class)
    table: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    words: Dict[int, Tuple[int, int]] = {}
    if nil_class == 2:
        for idx, (a, b) in enumerate(combinations(range(r), 2), start=r):
            table[(a, b)] = {idx: Fraction(1)}
            words[idx] = (a, b)
        dim = r + r * (r - 1) // 2
    else:
        if r != 2:
            raise UnsupportedRank(r, nil_class)
        x, y, z, xz, yz = range(5)
        table = {(x, y): {z: Fraction(1)}, (x, z): {xz: Fraction(1)}, (y, z): {yz: Fraction(1)}}
        words = {z: (x, y), xz: (x, z), yz: (y, z)}
        dim = 5
    F = validate_lie_algebra(dim, table, name or f"f_{{{r},{nil_class}}}")
    return F, extend_to_derivations(F, generators, words)
