"""
Modular fast path for matrix ranks.

The rank of a rational matrix is at least its rank modulo any prime (after
clearing denominators). Two independent random primes above 2**30 that
report the same rank are accepted; a disagreement, or a prime dividing a
nonzero entry, sends the caller back to the exact elimination. Callers that
know more about the matrix (a cochain complex) check the accepted ranks
again, see ``liecoh.services.cohomology.complex_ranks``.
"""
import logging
import random
from typing import Dict, List, Optional, Sequence

from sympy import randprime

from liecoh.core.linalg import Row, SparseMatrix, _components, eliminate_rank, integer_rows

logger = logging.getLogger(__name__)

PRIME_LOW = 2**30
PRIME_HIGH = 2**31


def random_primes(count: int = 2, rng: Optional[random.Random] = None) -> List[int]:
    """Distinct random primes in [2**30, 2**31)."""
    primes: List[int] = []
    while len(primes) < count:
        if rng is None:
            p = randprime(PRIME_LOW, PRIME_HIGH)
        else:
            p = randprime(rng.randrange(PRIME_LOW, PRIME_HIGH - 2**20), PRIME_HIGH)
        if p not in primes:
            primes.append(p)
    return primes


def _reduce_rows(rows: Dict[int, Row], p: int) -> Dict[int, Row]:
    reduced = {}
    for rid, row in rows.items():
        red = {c: v % p for c, v in row.items() if v % p}
        if red:
            reduced[rid] = red
    return reduced


def modular_rank(M: SparseMatrix, p: int) -> int:
    """Rank of ``M`` over Z/pZ. ``p`` must not divide any row's scaling denominator."""
    rows = _reduce_rows(integer_rows(M), p)
    if not rows:
        return 0
    return sum(eliminate_rank({rid: rows[rid] for rid in comp}, modulus=p) for comp in _components(rows))


def divides_entry(M: SparseMatrix, p: int) -> bool:
    return any(v % p == 0 for row in integer_rows(M).values() for v in row.values())


def agreed_modular_rank(M: SparseMatrix, primes: Optional[Sequence[int]] = None) -> Optional[int]:
    """Rank modulo two primes when they agree, otherwise ``None``."""
    primes = list(primes) if primes is not None else random_primes(2)
    unlucky = [p for p in primes if divides_entry(M, p)]
    if unlucky:
        logger.warning("prime %s divides an entry of a %dx%d matrix; using exact elimination",
                       unlucky[0], M.rows, M.cols)
        return None
    ranks = [modular_rank(M, p) for p in primes]
    logger.debug("modular ranks of %dx%d: %s mod %s", M.rows, M.cols, ranks, primes)
    if len(set(ranks)) == 1:
        return ranks[0]
    logger.warning("modular ranks disagree (%s mod %s); using exact elimination", ranks, primes)
    return None
