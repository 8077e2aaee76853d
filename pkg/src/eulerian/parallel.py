"""Process-pool fan-out for count-table folds.

Results always come back in task order, so merged tables (and anything
printed from them) never depend on the number of workers.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def default_jobs() -> int:
    raw = os.environ.get("EULERIAN_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def map_tasks(fn: Callable[[T], R], tasks: Iterable[T], jobs: int) -> list[R]:
    tasks = list(tasks)
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))
