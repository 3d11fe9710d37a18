"""Order-preserving parallel map.

Work is partitioned into an explicit task list; results come back in task
order whatever the worker count, so downstream reports are byte-identical
for jobs=1 and jobs=N.
"""

from __future__ import annotations

import os
from multiprocessing import Pool


def default_jobs() -> int:
    value = os.environ.get("MTL_JOBS", "1")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def pmap(fn, items, jobs: int = 1) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with Pool(processes=min(jobs, len(items))) as pool:
        return pool.map(fn, items)
