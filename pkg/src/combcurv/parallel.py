"""Optional process-level parallelism for per-item read-only checks.

Complexes are immutable, so distributing per-vertex or per-wheel work is
safe; results are returned in input order, keeping reports deterministic.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

ENV_JOBS = "COMBCURV_JOBS"


def default_jobs() -> int:
    raw = os.environ.get(ENV_JOBS, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn, items, jobs: int = 1) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as pool:
        return list(pool.map(fn, items))
