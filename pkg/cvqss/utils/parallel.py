"""Order-preserving fan-out used by sampling, enumeration and search."""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """Apply func to every item, in parallel when workers > 1.

    Results are returned in input order, so the output never depends on the
    worker count or on scheduling.

    Args:
        func (callable): Pure function of one item.
        items (iterable): Work items.
        workers (int, optional): Number of threads. Values below 2 run serially.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))


def child_seed(seed: int, index: int) -> int:
    """Derive the seed of task `index` as seed XOR index."""
    return (int(seed) ^ int(index)) & 0xFFFFFFFFFFFFFFFF
