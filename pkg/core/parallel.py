"""
Worker pool helpers for OneCenter.
Results always come back in input order so reductions are schedule-independent.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from .config_manager import get_config
from .errors import InvalidParameterError

T = TypeVar('T')
R = TypeVar('R')


def resolve_threads(threads: Optional[int] = None) -> int:
    """Map None to the configured value and 0 to the CPU count."""
    if threads is None:
        threads = get_config().threads
    if threads < 0:
        raise InvalidParameterError(f"threads must be >= 0, got {threads}")
    if threads == 0:
        return os.cpu_count() or 1
    return threads


def parallel_map(fn: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """Apply fn to every item, preserving order."""
    items = list(items)
    workers = min(resolve_threads(threads), max(1, len(items)))
    if workers == 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))


def argmin_pairs(values: Iterable) -> int:
    """Index of the smallest value; ties go to the smallest index."""
    best_index = -1
    best_value = None
    for index, value in enumerate(values):
        if best_value is None or value < best_value:
            best_value = value
            best_index = index
    return best_index


def argmax_pairs(values: Iterable) -> int:
    """Index of the largest value; ties go to the smallest index."""
    best_index = -1
    best_value = None
    for index, value in enumerate(values):
        if best_value is None or value > best_value:
            best_value = value
            best_index = index
    return best_index


def chunk_ranges(total: int, size: int) -> List[range]:
    """Split range(total) into consecutive ranges of at most `size`."""
    return [range(start, min(start + size, total)) for start in range(0, total, size)]
