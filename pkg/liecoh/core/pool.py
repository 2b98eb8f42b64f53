from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from liecoh.config import settings

T = TypeVar("T")
R = TypeVar("R")


def map_ordered(fn: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """Map ``fn`` over ``items`` with at most ``threads`` workers, keeping input order.

    ``threads=0`` runs sequentially; ``None`` falls back to LIECOH_THREADS.
    """
    items = list(items)
    workers = settings.LIECOH_THREADS if threads is None else threads
    if workers <= 0 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as executor:
        return list(executor.map(fn, items))
