"""
Exact sparse linear algebra over the rationals.

Scalars are ``fractions.Fraction`` (always reduced, positive denominator).
``SparseMatrix`` stores only nonzero entries keyed by ``(row, col)``.

Ranks are computed by fraction-free integer elimination: every row is
scaled to a primitive integer vector, rows are combined as ``a*r - b*p``
with the multipliers divided by their gcd, and each result is divided by
its content again. Pivots are chosen Markowitz-style (shortest row, then
sparsest column). Before eliminating, the matrix is split into the
connected components of its row/column incidence graph; Chevalley-Eilenberg
differentials in a weight basis fall apart into weight blocks this way.
"""
import heapq
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from liecoh.core.exceptions import DimensionMismatch

logger = logging.getLogger(__name__)

Rational = Fraction
Scalar = Union[int, Fraction]
Row = Dict[int, int]


def to_rational(value: Union[Scalar, str]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"exact scalars only, got {type(value).__name__}")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """Canonical "p/q" form; "p" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse a reduced "p", "p/q" or "-p/q" (a unicode minus sign is accepted too)."""
    cleaned = text.strip().replace("−", "-")
    num, sep, den = cleaned.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if q <= 0:
        raise ValueError(f"denominator must be positive: {text!r}")
    if math.gcd(p, q) != 1:
        raise ValueError(f"not in lowest terms: {text!r}")
    return Fraction(p, q)


class SparseMatrix:
    """Immutable sparse rational matrix."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Union[Mapping[Tuple[int, int], Scalar], Iterable] = ()):
        if rows < 0 or cols < 0:
            raise DimensionMismatch(f"negative shape ({rows}, {cols})")
        if isinstance(entries, Mapping):
            entries = entries.items()
        data: Dict[Tuple[int, int], Fraction] = {}
        for (r, c), value in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise DimensionMismatch(f"entry ({r}, {c}) outside a {rows}x{cols} matrix")
            value = to_rational(value)
            if value:
                data[(r, c)] = value
        self.rows = rows
        self.cols = cols
        self._entries = data

    # -- construction -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[Scalar]], cols: Optional[int] = None) -> "SparseMatrix":
        n_rows = len(rows)
        n_cols = cols if cols is not None else (len(rows[0]) if rows else 0)
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != n_cols:
                raise DimensionMismatch(f"row {i} has length {len(row)}, expected {n_cols}")
            for j, value in enumerate(row):
                if value:
                    entries[(i, j)] = value
        return cls(n_rows, n_cols, entries)

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping[int, Scalar]]) -> "SparseMatrix":
        return cls(rows, len(columns), (((r, j), v) for j, col in enumerate(columns) for r, v in col.items()))

    @classmethod
    def from_rows(cls, cols: int, rows: Sequence[Mapping[int, Scalar]]) -> "SparseMatrix":
        return cls(len(rows), cols, (((i, c), v) for i, row in enumerate(rows) for c, v in row.items()))

    @classmethod
    def vstack(cls, blocks: Sequence["SparseMatrix"], cols: Optional[int] = None) -> "SparseMatrix":
        if not blocks:
            return cls(0, cols or 0)
        width = blocks[0].cols
        if any(b.cols != width for b in blocks):
            raise DimensionMismatch("vstack needs blocks with equal column counts")
        entries = {}
        offset = 0
        for block in blocks:
            for (r, c), v in block._entries.items():
                entries[(r + offset, c)] = v
            offset += block.rows
        return cls(offset, width, entries)

    # -- access -------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> Mapping[Tuple[int, int], Fraction]:
        return MappingProxyType(self._entries)

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        return self._entries.get(index, Fraction(0))

    def items(self) -> Iterator[Tuple[Tuple[int, int], Fraction]]:
        """Nonzero entries in row-major order."""
        for key in sorted(self._entries):
            yield key, self._entries[key]

    def row_dicts(self) -> List[Dict[int, Fraction]]:
        out: List[Dict[int, Fraction]] = [dict() for _ in range(self.rows)]
        for (r, c), v in self.items():
            out[r][c] = v
        return out

    def column_dicts(self) -> List[Dict[int, Fraction]]:
        out: List[Dict[int, Fraction]] = [dict() for _ in range(self.cols)]
        for (r, c), v in self.items():
            out[c][r] = v
        return out

    def column(self, j: int) -> List[Fraction]:
        col = [Fraction(0)] * self.rows
        for (r, c), v in self._entries.items():
            if c == j:
                col[r] = v
        return col

    def to_dense(self) -> List[List[Fraction]]:
        dense = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            dense[r][c] = v
        return dense

    def is_zero(self) -> bool:
        return not self._entries

    # -- arithmetic ---------------------------------------------------

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self._entries.items()})

    @property
    def T(self) -> "SparseMatrix":
        return self.transpose()

    def _check_same_shape(self, other: "SparseMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check_same_shape(other)
        data = dict(self._entries)
        for key, v in other._entries.items():
            data[key] = data.get(key, 0) + v
        return SparseMatrix(self.rows, self.cols, data)

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, factor: Scalar) -> "SparseMatrix":
        factor = to_rational(factor)
        return SparseMatrix(self.rows, self.cols, {k: factor * v for k, v in self._entries.items()})

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        by_col: Dict[int, List[Tuple[int, Fraction]]] = {}
        for (r, c), v in self._entries.items():
            by_col.setdefault(c, []).append((r, v))
        data: Dict[Tuple[int, int], Fraction] = {}
        for (k, j), b in other._entries.items():
            for i, a in by_col.get(k, ()):
                key = (i, j)
                data[key] = data.get(key, 0) + a * b
        return SparseMatrix(self.rows, other.cols, data)

    def apply(self, vector: Union[Sequence[Scalar], Mapping[int, Scalar]]) -> List[Fraction]:
        """Matrix-vector product; ``vector`` may be dense or a sparse dict."""
        if not isinstance(vector, Mapping):
            if len(vector) != self.cols:
                raise DimensionMismatch(f"vector of length {len(vector)} for {self.cols} columns")
            vector = {i: v for i, v in enumerate(vector) if v}
        out = [Fraction(0)] * self.rows
        for (r, c), v in self._entries.items():
            x = vector.get(c)
            if x:
                out[r] += v * x
        return out

    def commutator(self, other: "SparseMatrix") -> "SparseMatrix":
        return self @ other - other @ self

    # -- comparison ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


# ============================================
# Elimination kernels
# ============================================

def _primitive(row: Mapping[int, Fraction]) -> Row:
    """Scale a rational row to a primitive integer row (content 1, same span)."""
    lcm = 1
    for v in row.values():
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = {c: int(v * lcm) for c, v in row.items()}
    g = math.gcd(*ints.values()) if ints else 1
    if g > 1:
        ints = {c: v // g for c, v in ints.items()}
    return ints


def _components(rows: Mapping[int, Mapping[int, object]]) -> List[List[int]]:
    """Group row ids into connected components of the row/column incidence graph."""
    parent: Dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for row in rows.values():
        cols = iter(row)
        first = next(cols)
        parent.setdefault(first, first)
        ra = find(first)
        for c in cols:
            parent.setdefault(c, c)
            rb = find(c)
            if ra != rb:
                if rb < ra:
                    ra, rb = rb, ra
                parent[rb] = ra
    groups: Dict[int, List[int]] = {}
    for rid in sorted(rows):
        groups.setdefault(find(next(iter(rows[rid]))), []).append(rid)
    return [groups[k] for k in sorted(groups)]


def eliminate_rank(rows: Dict[int, Row], modulus: Optional[int] = None) -> int:
    """Rank of the integer rows (destroys ``rows``).

    With ``modulus`` set the elimination runs in Z/pZ, otherwise it is the
    fraction-free integer elimination described in the module docstring.
    """
    col_rows: Dict[int, set] = {}
    for rid, row in rows.items():
        for c in row:
            col_rows.setdefault(c, set()).add(rid)
    heap = [(len(row), rid) for rid, row in rows.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        length, r = heapq.heappop(heap)
        pivot_row = rows.get(r)
        if pivot_row is None or len(pivot_row) != length:
            continue  # stale heap entry
        c = min(pivot_row, key=lambda col: (len(col_rows[col]), col))
        a = pivot_row[c]
        if modulus is not None and a != 1:
            inv = pow(a, -1, modulus)
            pivot_row = {col: v * inv % modulus for col, v in pivot_row.items()}
            a = 1
        for o in sorted(col_rows[c] - {r}):
            old = rows[o]
            b = old[c]
            if modulus is None:
                g = math.gcd(a, b)
                fa, fb = a // g, b // g
                new = {col: fa * v for col, v in old.items()}
                for col, v in pivot_row.items():
                    w = new.get(col, 0) - fb * v
                    if w:
                        new[col] = w
                    else:
                        new.pop(col, None)
                if new:
                    content = math.gcd(*new.values())
                    if content > 1:
                        new = {col: v // content for col, v in new.items()}
            else:
                new = dict(old)
                for col, v in pivot_row.items():
                    w = (new.get(col, 0) - b * v) % modulus
                    if w:
                        new[col] = w
                    else:
                        new.pop(col, None)
            for col in old.keys() - new.keys():
                col_rows[col].discard(o)
            for col in new.keys() - old.keys():
                col_rows.setdefault(col, set()).add(o)
            if new:
                rows[o] = new
                heapq.heappush(heap, (len(new), o))
            else:
                del rows[o]
        for col in pivot_row:
            col_rows[col].discard(r)
        del rows[r]
        rank += 1
    return rank


def integer_rows(M: SparseMatrix) -> Dict[int, Row]:
    grouped: Dict[int, Dict[int, Fraction]] = {}
    for (r, c), v in M.entries.items():
        grouped.setdefault(r, {})[c] = v
    return {r: _primitive(row) for r, row in grouped.items()}


def rank(M: SparseMatrix, *, fast: Optional[bool] = None) -> int:
    """Exact rank of ``M`` over Q.

    ``fast=True`` tries the two-prime modular path first (see
    ``liecoh.core.modular``) and only accepts it when both primes agree.
    ``None`` uses the LIECOH_FAST_RANK setting.
    """
    if M.nnz == 0:
        return 0
    if fast is None:
        from liecoh.config import settings
        fast = settings.LIECOH_FAST_RANK
    if fast:
        from liecoh.core.modular import agreed_modular_rank
        agreed = agreed_modular_rank(M)
        if agreed is not None:
            return agreed
    rows = integer_rows(M)
    components = _components(rows)
    total = 0
    for comp in components:
        total += eliminate_rank({rid: rows[rid] for rid in comp})
    logger.debug("rank %dx%d nnz=%d: %d components, rank %d", M.rows, M.cols, M.nnz, len(components), total)
    return total


# ============================================
# Kernels and row spaces
# ============================================

@dataclass(frozen=True)
class Nullspace:
    """Basis of a right null space in reduced form.

    ``vectors[i]`` has a 1 at ``free[i]`` and 0 at every other free column, so
    the coordinates of a null vector ``w`` in this basis are ``w[free[i]]``.
    """

    cols: int
    free: Tuple[int, ...]
    vectors: Tuple[Mapping[int, Fraction], ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.free)

    def dense(self) -> List[Tuple[Fraction, ...]]:
        out = []
        for vec in self.vectors:
            dense = [Fraction(0)] * self.cols
            for i, v in vec.items():
                dense[i] = v
            out.append(tuple(dense))
        return out

    def as_matrix(self) -> SparseMatrix:
        """Basis vectors as the columns of a ``cols x dim`` matrix."""
        return SparseMatrix.from_columns(self.cols, self.vectors)

    def coordinates(self, vector: Union[Sequence[Fraction], Mapping[int, Fraction]]) -> List[Fraction]:
        if isinstance(vector, Mapping):
            return [Fraction(vector.get(f, 0)) for f in self.free]
        return [Fraction(vector[f]) for f in self.free]


def _gauss_jordan(rows: Iterable[Mapping[int, Fraction]]) -> Dict[int, Dict[int, Fraction]]:
    """Reduced echelon form: pivot column -> row with 1 at the pivot and 0 at other pivots."""
    pivots: Dict[int, Dict[int, Fraction]] = {}
    for original in rows:
        row = dict(original)
        for pc in [c for c in row if c in pivots]:
            coef = row.get(pc)
            if not coef:
                continue
            for col, v in pivots[pc].items():
                w = row.get(col, 0) - coef * v
                if w:
                    row[col] = w
                else:
                    row.pop(col, None)
        if not row:
            continue
        pc = min(row)
        inv = 1 / row[pc]
        row = {col: v * inv for col, v in row.items()}
        for other_pc, other in pivots.items():
            coef = other.get(pc)
            if coef:
                for col, v in row.items():
                    w = other.get(col, 0) - coef * v
                    if w:
                        other[col] = w
                    else:
                        other.pop(col, None)
        pivots[pc] = row
    return pivots


def nullspace(M: SparseMatrix) -> Nullspace:
    rows: Dict[int, Dict[int, Fraction]] = {}
    for (r, c), v in M.entries.items():
        rows.setdefault(r, {})[c] = v

    # Singleton rows force their column to zero; peel them off first.
    forced: set = set()
    singles = [rid for rid, row in rows.items() if len(row) == 1]
    while singles:
        for rid in singles:
            row = rows.pop(rid, None)
            if row:
                forced.add(next(iter(row)))
        for rid in list(rows):
            row = rows[rid]
            if forced.intersection(row):
                row = {c: v for c, v in row.items() if c not in forced}
                if row:
                    rows[rid] = row
                else:
                    del rows[rid]
        singles = [rid for rid, row in rows.items() if len(row) == 1]

    pivot_rows: Dict[int, Dict[int, Fraction]] = {}
    for comp in _components(rows) if rows else []:
        ordered = sorted(comp, key=lambda rid: (len(rows[rid]), rid))
        pivot_rows.update(_gauss_jordan(rows[rid] for rid in ordered))

    pivots = forced | set(pivot_rows)
    free = tuple(c for c in range(M.cols) if c not in pivots)
    users: Dict[int, List[int]] = {}
    for pc, row in pivot_rows.items():
        for c in row:
            if c != pc:
                users.setdefault(c, []).append(pc)
    vectors = []
    for f in free:
        vec = {f: Fraction(1)}
        for pc in users.get(f, ()):
            vec[pc] = -pivot_rows[pc][f]
        vectors.append(MappingProxyType(vec))
    return Nullspace(cols=M.cols, free=free, vectors=tuple(vectors))


def kernel_basis(M: SparseMatrix) -> List[Tuple[Fraction, ...]]:
    """Basis of the right null space of ``M`` as dense rational vectors."""
    return nullspace(M).dense()


def row_space_basis(vectors: Iterable[Union[Sequence[Scalar], Mapping[int, Scalar]]]) -> List[Dict[int, Fraction]]:
    """Independent spanning set (reduced echelon rows) of the span of ``vectors``."""
    sparse_rows = []
    for vec in vectors:
        items = vec.items() if isinstance(vec, Mapping) else enumerate(vec)
        sparse_rows.append({i: to_rational(v) for i, v in items if v})
    pivots = _gauss_jordan(sparse_rows)
    return [pivots[pc] for pc in sorted(pivots)]


def span_dim(vectors: Iterable[Union[Sequence[Scalar], Mapping[int, Scalar]]]) -> int:
    return len(row_space_basis(vectors))
