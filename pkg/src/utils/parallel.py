"""Process-pool helper for sharded enumeration."""

import multiprocessing
from typing import Callable, Optional, Sequence, TypeVar

from ..config.settings import Settings

T = TypeVar("T")
R = TypeVar("R")


def resolve_jobs(jobs: Optional[int]) -> int:
    """Worker count: explicit value, else the configured default, capped by CPUs."""
    requested = Settings.JOBS if jobs is None else jobs
    if requested < 1:
        raise ValueError(f"jobs must be at least 1, got {requested}")
    return min(requested, multiprocessing.cpu_count())


def run_sharded(
    func: Callable[[T], R], payloads: Sequence[T], jobs: Optional[int] = None
) -> list[R]:
    """
    Apply a top-level function to every payload, in order.

    With one job (or one payload) everything runs in-process; otherwise a
    process pool is used. Results come back in payload order either way, so
    merging them is deterministic.
    """
    n_process = min(resolve_jobs(jobs), len(payloads))
    if n_process <= 1:
        return [func(p) for p in payloads]
    with multiprocessing.Pool(n_process, maxtasksperchild=1000) as pool:
        return pool.map(func, payloads)
