from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Sequence, Tuple

from liecoh.core.exceptions import DimensionMismatch
from liecoh.core.linalg import SparseMatrix, to_rational

Vector = Mapping[int, Fraction]
BracketTable = Mapping[Tuple[int, int], Vector]


def _freeze_vector(vec: Mapping[int, object]) -> Mapping[int, Fraction]:
    return MappingProxyType({k: to_rational(v) for k, v in sorted(vec.items()) if v})


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Finite-dimensional Lie algebra given by structure constants.

    Indices are 0-based internally. ``brackets[(i, j)]`` (with ``i < j``) is the
    sparse coefficient vector of ``[e_i, e_j]``; missing pairs are zero and
    ``[e_j, e_i] = -[e_i, e_j]`` is derived. Use
    ``liecoh.services.lie.validate_lie_algebra`` to build instances that are
    checked against the Jacobi identity.
    """

    dim: int
    name: str
    brackets: BracketTable = field(default_factory=dict, repr=False)
    construction: Optional["Construction"] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.dim < 0:
            raise DimensionMismatch(f"negative dimension {self.dim}")
        table: Dict[Tuple[int, int], Mapping[int, Fraction]] = {}
        for (i, j), vec in self.brackets.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise DimensionMismatch(f"bracket index ({i}, {j}) outside dimension {self.dim}")
            if i == j:
                raise DimensionMismatch(f"bracket [e_{i + 1}, e_{i + 1}] must be zero")
            if i > j:
                raise DimensionMismatch(f"bracket keys need i < j, got ({i}, {j})")
            if any(not (0 <= k < self.dim) for k in vec):
                raise DimensionMismatch(f"coefficient index outside dimension {self.dim} in [e_{i + 1}, e_{j + 1}]")
            frozen = _freeze_vector(vec)
            if frozen:
                table[(i, j)] = frozen
        object.__setattr__(self, "brackets", MappingProxyType(dict(sorted(table.items()))))

    def bracket(self, i: int, j: int) -> Dict[int, Fraction]:
        """``[e_i, e_j]`` as a sparse coefficient dict."""
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return {k: -v for k, v in self.brackets.get((j, i), {}).items()}

    def bracket_vectors(self, x: Vector, y: Vector) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        for i, a in x.items():
            if not a:
                continue
            for j, b in y.items():
                if not b or i == j:
                    continue
                for k, c in self.bracket(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v}

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self.bracket(i, j).get(k, Fraction(0))

    def nonzero_brackets(self):
        """(i, j, vector) for every nonzero bracket with i < j, sorted."""
        for (i, j), vec in self.brackets.items():
            yield i, j, vec

    @property
    def is_abelian(self) -> bool:
        return not self.brackets

    def renamed(self, name: str) -> "LieAlgebra":
        return LieAlgebra(self.dim, name, self.brackets, self.construction)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and dict(self.brackets) == dict(other.brackets)

    def __hash__(self) -> int:
        return hash((self.dim, tuple((k, tuple(v.items())) for k, v in self.brackets.items())))


@dataclass(frozen=True, eq=False)
class Representation:
    """Action matrices ``actions[i] = rho(e_i)`` of ``algebra`` on a ``dim``-space."""

    algebra: LieAlgebra
    dim: int
    actions: Tuple[SparseMatrix, ...]
    name: str = ""

    def __post_init__(self):
        actions = tuple(self.actions)
        if len(actions) != self.algebra.dim:
            raise DimensionMismatch(
                f"{len(actions)} action matrices for an algebra of dimension {self.algebra.dim}"
            )
        for i, mat in enumerate(actions):
            if mat.shape != (self.dim, self.dim):
                raise DimensionMismatch(f"action of e_{i + 1} has shape {mat.shape}, expected {(self.dim, self.dim)}")
        object.__setattr__(self, "actions", actions)

    def act(self, i: int) -> SparseMatrix:
        return self.actions[i]

    def of_vector(self, x: Vector) -> SparseMatrix:
        """rho(x) for x = sum x_i e_i."""
        out = SparseMatrix.zeros(self.dim, self.dim)
        for i, a in x.items():
            if a:
                out = out + self.actions[i].scale(a)
        return out


@dataclass(frozen=True)
class Construction:
    """How an algebra was assembled as ``levi ⋉ radical``.

    ``levi_indices``/``radical_indices`` locate the two parts in the basis of
    the assembled algebra; ``action`` is the levi action on the radical.
    """

    levi: LieAlgebra
    radical: LieAlgebra
    action: Representation
    levi_indices: Tuple[int, ...]
    radical_indices: Tuple[int, ...]

    def __post_init__(self):
        if self.action.algebra != self.levi or self.action.dim != self.radical.dim:
            raise DimensionMismatch("construction action does not match its levi/radical parts")
        if len(self.levi_indices) != self.levi.dim or len(self.radical_indices) != self.radical.dim:
            raise DimensionMismatch("construction index lists do not match part dimensions")


def dense_vector(vec: Vector, dim: int) -> Tuple[Fraction, ...]:
    out = [Fraction(0)] * dim
    for k, v in vec.items():
        out[k] = v
    return tuple(out)


def sparse_vector(values: Sequence[object]) -> Dict[int, Fraction]:
    return {i: to_rational(v) for i, v in enumerate(values) if v}
