"""Order-preserving parallel map over evaluation points."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

THREADS_ENV = "ALPHAKIT_THREADS"


def thread_count() -> int:
    """Worker count from ``ALPHAKIT_THREADS``; 0 or unset means auto."""
    raw = os.environ.get(THREADS_ENV, "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        n = min(8, os.cpu_count() or 1)
    return n


def pmap(func, items) -> list:
    """``[func(x) for x in items]``, possibly threaded; output order is fixed."""
    items = list(items)
    n = thread_count()
    if n == 1 or len(items) < 2:
        return [func(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(func, items))
