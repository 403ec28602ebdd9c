"""
Ordered thread-pool map
"""
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from .config import get_settings

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """
    Apply func to every item on a thread pool, returning results in input order.

    Args:
        func: Callable applied to each item
        items: Inputs
        workers: Pool size; defaults to APSTRIP_THREADS or the core count

    Returns:
        List of results, one per item, in the order of items
    """
    items = list(items)
    if workers is None:
        workers = get_settings().worker_count
    workers = max(1, min(workers, len(items)))
    if workers == 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
