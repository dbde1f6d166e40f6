"""Process-level parallelism for scans, capped by SEGBOUNDS_THREADS.

Scans over independent parameter points are embarrassingly parallel and the
work is CPU-bound big-integer arithmetic, so worker processes (not threads)
are used.  Results always come back in input order, keeping every report
deterministic regardless of the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, TypeVar

ENV_THREADS = "SEGBOUNDS_THREADS"

T = TypeVar("T")
R = TypeVar("R")


def worker_cap() -> int:
    """Parallelism cap: SEGBOUNDS_THREADS if set (min 1), else the CPU count."""
    raw = os.environ.get(ENV_THREADS, "")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise ValueError(f"{ENV_THREADS} must be an integer, got {raw!r}")
    return max(1, os.cpu_count() or 1)


def parallel_map(fn: Callable[[T], R], items: Sequence[T]) -> List[R]:
    """Order-preserving map, run across processes when the cap allows.

    Falls back to a serial map for a single worker or tiny inputs; ``fn``
    must be a module-level callable so it can be pickled.
    """
    items = list(items)
    cap = worker_cap()
    if cap <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    workers = min(cap, len(items))
    # chunksize 1: job costs vary by orders of magnitude across scan points,
    # so fine-grained dispatch is what actually balances the load
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=1))
