"""
Exception hierarchy for liecoh.

Every domain error raised by the library derives from LieCohError and keeps
its structured payload as attributes, so the CLI and the HTTP layer can
report it without parsing messages.
"""
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple


class LieCohError(Exception):
    """Base class for all domain errors."""


class GuardrailExceeded(LieCohError):
    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: {size} exceeds the configured limit {limit}")


# ============================================
# Structure constants and representations
# ============================================

class DimensionMismatch(LieCohError):
    def __init__(self, message: str):
        super().__init__(message)


class JacobiViolation(LieCohError):
    """Jacobi identity fails; ``violations`` lists every failed triple (1-based)."""

    def __init__(self, violations: Sequence[Tuple[Tuple[int, int, int], Sequence[Fraction]]]):
        self.violations: List[Tuple[Tuple[int, int, int], Tuple[Fraction, ...]]] = [
            (triple, tuple(defect)) for triple, defect in violations
        ]
        self.triple = self.violations[0][0]
        self.defect = self.violations[0][1]
        listed = ", ".join(str(t) for t, _ in self.violations[:8])
        more = "" if len(self.violations) <= 8 else f" (+{len(self.violations) - 8} more)"
        super().__init__(f"Jacobi identity fails for triples {listed}{more}")


class RepresentationMismatch(LieCohError):
    def __init__(self, message: str, pair: Optional[Tuple[int, int]] = None):
        self.pair = pair
        super().__init__(message)


class NotADerivation(LieCohError):
    def __init__(self, index: int, pair: Tuple[int, int]):
        self.index = index
        self.pair = pair
        super().__init__(
            f"action of basis element {index} is not a derivation on the pair {pair}"
        )


class NotInvariant(LieCohError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"bilinear form is not invariant under basis element {index}")


class NotAntisymmetric(LieCohError):
    pass


class UnsupportedClass(LieCohError):
    def __init__(self, nil_class: int):
        self.nil_class = nil_class
        super().__init__(f"free nilpotent algebras are supported for class 2 or 3, not {nil_class}")


class UnsupportedRank(LieCohError):
    def __init__(self, rank: int, nil_class: int):
        self.rank = rank
        self.nil_class = nil_class
        super().__init__(f"class {nil_class} free nilpotent algebra on {rank} generators is not supported")


# ============================================
# sl2 weight theory
# ============================================

class NotWeightDiagonalizable(LieCohError):
    def __init__(self, found: int, expected: int):
        self.found = found
        self.expected = expected
        super().__init__(
            f"weight spaces of e_3 span {found} dimensions, module has dimension {expected}"
        )


class NotAModule(LieCohError):
    def __init__(self, weight: int, multiplicity: int):
        self.weight = weight
        self.multiplicity = multiplicity
        super().__init__(
            f"weight multiset is not the character of an sl2-module "
            f"(highest weight {weight} would get multiplicity {multiplicity})"
        )


# ============================================
# Cohomology engine
# ============================================

class ModuleMismatch(LieCohError):
    pass


class IncompatibleActions(LieCohError):
    def __init__(self, message: str, index: Optional[int] = None):
        self.index = index
        super().__init__(message)


class NotASemidirectProduct(LieCohError):
    pass


class UnsupportedLevi(LieCohError):
    pass


# ============================================
# Catalog and files
# ============================================

class UnknownLabel(LieCohError):
    def __init__(self, label: str):
        self.label = label
        super().__init__(f"unknown catalog label {label!r}")


class ExternalDataRequired(LieCohError):
    def __init__(self, label: str, filename: str):
        self.label = label
        self.filename = filename
        super().__init__(
            f"{label} has no structure constants in the catalog; "
            f"supply {filename} (see LIECOH_EXTERNAL_DIR or --external)"
        )


class ParseError(LieCohError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None,
                 location: Any = None):
        self.line = line
        self.column = column
        self.location = location
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
