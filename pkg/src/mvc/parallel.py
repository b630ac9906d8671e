"""Order-preserving fan-out over worker processes."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def default_jobs() -> int:
    return os.cpu_count() or 1


def parallel_map(fn: Callable[[T], R], items: Iterable[T], jobs: int | None = 1) -> list[R]:
    """``[fn(x) for x in items]``, optionally spread over ``jobs`` processes.

    Results always come back in input order, so callers aggregate
    deterministically whatever the worker count. ``fn`` must be picklable.
    """
    work: Sequence[T] = list(items)
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(work) < 2:
        return [fn(x) for x in work]
    chunk = max(1, len(work) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, work, chunksize=chunk))
