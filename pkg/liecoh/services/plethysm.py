"""
Exterior powers of sl2 irreducibles and the partition counts behind them.

Λ^j(V_{j+k-1}) = ⊕_n N(j, k, n) V_{jk-2n}, where N(j, k, n) is the q^n
coefficient of (1 - q)[j+k, k]_q and p(j, k, n) counts partitions of n into
at most k parts of size at most j.
"""
import logging
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Literal

from liecoh.config import settings
from liecoh.core.exceptions import GuardrailExceeded
from liecoh.models.weights import IntPolynomial, Sl2Decomposition, WeightMultiset
from liecoh.services.sl2 import decompose

logger = logging.getLogger(__name__)

Method = Literal["brute", "formula"]


# ============================================
# Partition counts
# ============================================

@lru_cache(maxsize=None)
def partition_count(j: int, k: int, n: int) -> int:
    """p(j, k, n); 0 outside 0 <= n <= jk."""
    if n < 0 or j < 0 or k < 0 or n > j * k:
        return 0
    if n == 0:
        return 1
    # n > 0 forces j, k >= 1 here
    return partition_count(j, k - 1, n) + partition_count(j - 1, k, n - k)


def gaussian_binomial(j: int, k: int) -> IntPolynomial:
    """[j+k, k]_q as an integer polynomial of degree jk."""
    return IntPolynomial(tuple(partition_count(j, k, n) for n in range(j * k + 1)))


def multiplicity_N(j: int, k: int, n: int) -> int:
    return partition_count(j, k, n) - partition_count(j, k, n - 1)


def restricted_partition_count(n: int, parts: Iterable[int]) -> int:
    """Number of partitions of n with every part taken from ``parts``."""
    if n < 0:
        return 0
    ways = [1] + [0] * n
    for part in sorted(set(parts)):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def c_coefficients(up_to: int) -> List[int]:
    """c_0..c_{up_to}, coefficients of 1 / ((1 - x^2)(1 - x^3)(1 - x^4))."""
    if up_to < 0:
        return []
    ways = [1] + [0] * up_to
    for part in (2, 3, 4):
        for total in range(part, up_to + 1):
            ways[total] += ways[total - part]
    return ways


def _c(i: int) -> int:
    return c_coefficients(i)[i] if i >= 0 else 0


def lambda4_multiplicity(ell: int, k: int) -> int:
    """Multiplicity of V_{2 ell} in Λ^4(V_{k+3})."""
    return _c(2 * k - ell) - _c(2 * k - 2 * ell + 1)


def lambda3_self_multiplicity(m: int) -> int:
    """Multiplicity of V_m in Λ^3(V_m), by m mod 6."""
    q, r = divmod(m, 6)
    return q + 1 if r in (3, 5) else q


# ============================================
# Exterior powers
# ============================================

def exterior_weights(m: int, j: int) -> WeightMultiset:
    """Weights of Λ^j(V_m): sums over j-subsets of {m, m-2, ..., -m}."""
    count = comb(m + 1, j) if 0 <= j <= m + 1 else 0
    if count > settings.LIECOH_MAX_SUBSETS:
        raise GuardrailExceeded(f"j-subsets of the weights of V_{m}", count, settings.LIECOH_MAX_SUBSETS)
    weights = [m - 2 * i for i in range(m + 1)]
    counts: Dict[int, int] = {}
    for subset in combinations(weights, j):
        total = sum(subset)
        counts[total] = counts.get(total, 0) + 1
    return WeightMultiset(counts)


def exterior_power_decomposition(m: int, j: int, method: Method = "formula") -> Sl2Decomposition:
    if j < 0 or j > m + 1:
        return Sl2Decomposition()
    if method == "brute":
        return decompose(exterior_weights(m, j))
    if method != "formula":
        raise ValueError(f"unknown method {method!r}")
    k = m - j + 1
    mults = {}
    for n in range(j * k // 2 + 1):
        mult = multiplicity_N(j, k, n)
        if mult:
            mults[j * k - 2 * n] = mult
    logger.debug("Λ^%d(V_%d) via q-binomial [%d, %d]", j, m, j + k, k)
    return Sl2Decomposition(mults)
