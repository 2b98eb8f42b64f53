"""
Closed-form values for g = sl2 ⋉ V_m, kept apart from the engine so that
every one of them can be checked against a computation.
"""
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from liecoh.models.weights import Sl2Decomposition

# Degrees k with H^k(sl2 ⋉ V_m, sl2 ⋉ V_m) = C; all other degrees vanish.
TOTAL_ADJOINT_PATTERNS: Dict[int, Tuple[int, ...]] = {
    1: (1, 4),
    2: (1, 2, 4, 5),
    3: (1, 3, 4, 6),
    5: (1, 3, 4, 5, 6, 8),
    7: (1, 3, 4, 5, 6, 7, 8, 10),
}


class Prediction(NamedTuple):
    quantity: str
    predicted: Optional[int]


class PredictionCheck(NamedTuple):
    quantity: str
    predicted: Optional[int]
    computed: int

    @property
    def ok(self) -> bool:
        return self.predicted is None or self.predicted == self.computed


def lambda2_decomposition(m: int) -> Sl2Decomposition:
    """Λ^2(V_m) = V_{2m-2} ⊕ V_{2m-6} ⊕ ... (nonnegative weights only)."""
    if m < 1:
        return Sl2Decomposition()
    return Sl2Decomposition.of(*range(2 * m - 2, -1, -4))


def h2_radical(m: int) -> int:
    """dim H^2(V, V)^s."""
    return 1 if m % 4 == 2 else 0


def h2_quotient(m: int) -> int:
    """dim H^2(V, g/V)^s."""
    return 1 if m % 2 == 0 else 0


def h3_quotient(m: int) -> Optional[int]:
    """dim H^3(V, g/V)^s for m >= 2."""
    if m < 2:
        return None
    return 1 if m % 4 == 0 else 0


def h3_radical(m: int) -> int:
    """dim H^3(V, V)^s: floor(n/3) for m = 2n, floor((n+1)/3) for m = 2n-1."""
    if m % 2 == 0:
        return (m // 2) // 3
    return ((m + 1) // 2 + 1) // 3


def h4_quotient(m: int) -> Optional[int]:
    return 0 if m >= 3 else None


def h4_radical(m: int) -> Optional[int]:
    """Zero for odd m; no closed form is used for even m."""
    return 0 if m % 2 else None


def h2_adjoint(m: int) -> int:
    return 1 if m % 4 == 2 or m == 4 else 0


def low_degree_adjoint(m: int) -> Tuple[Optional[int], ...]:
    """dim H^0..H^4(g, g); H^3 and H^4 are known for odd m only."""
    if m % 2:
        n = (m + 1) // 2
        return (0, 1, 0, (n + 1) // 3, 1)
    return (0, 1, h2_adjoint(m), None, None)


def total_adjoint(m: int) -> Optional[Tuple[int, ...]]:
    """Full table dim H^0..H^{m+4}(g, g) where it is known."""
    pattern = TOTAL_ADJOINT_PATTERNS.get(m)
    if pattern is None:
        return None
    return tuple(1 if k in pattern else 0 for k in range(m + 5))


def h1_abelian_radical(multiplicities: Iterable[int]) -> int:
    """dim H^1(sl2 ⋉ ⊕ V_{n_i}^{e_i}) = Σ e_i^2, given the e_i."""
    return sum(e * e for e in multiplicities)


def predictions(m: int) -> List[Prediction]:
    low = low_degree_adjoint(m)
    out = [
        Prediction("H^2(V,V)^s", h2_radical(m)),
        Prediction("H^2(V,g/V)^s", h2_quotient(m)),
        Prediction("H^3(V,g/V)^s", h3_quotient(m)),
        Prediction("H^3(V,V)^s", h3_radical(m)),
        Prediction("H^4(V,g/V)^s", h4_quotient(m)),
        Prediction("H^4(V,V)^s", h4_radical(m)),
    ]
    out.extend(Prediction(f"H^{k}(g,g)", value) for k, value in enumerate(low))
    return out


def check_predictions(m: int, *, threads: Optional[int] = None) -> List[PredictionCheck]:
    """Compare every prediction with the invariant-complex computation.

    H^k(g, g) is assembled from H^k(V, g)^s + H^{k-3}(V, g)^s.
    """
    from liecoh.services.invariants import les_report

    report = les_report(m, max_degree=4, threads=threads)

    def column(name: str, k: int) -> int:
        row = report.row(k)
        return getattr(row, name) if row is not None else 0

    computed = {
        "H^2(V,V)^s": column("radical", 2),
        "H^2(V,g/V)^s": column("quotient", 2),
        "H^3(V,g/V)^s": column("quotient", 3),
        "H^3(V,V)^s": column("radical", 3),
        "H^4(V,g/V)^s": column("quotient", 4),
        "H^4(V,V)^s": column("radical", 4),
    }
    for k in range(5):
        computed[f"H^{k}(g,g)"] = column("algebra", k) + (column("algebra", k - 3) if k >= 3 else 0)
    return [PredictionCheck(p.quantity, p.predicted, computed[p.quantity]) for p in predictions(m)]
