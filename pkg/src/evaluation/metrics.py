"""
metrics.py
==========

Utility functions for the runtime statistics attached to checker reports
and acceptance runs: elapsed time, throughput (items per second) and the
resident memory of the process.
"""

from __future__ import annotations

import time
from typing import Dict

import psutil


def throughput(n_items: int, elapsed_seconds: float) -> float:
    """Compute throughput in items per second.

    Parameters
    ----------
    n_items : int
        Number of items processed (matrices lifted, tuples scanned, ...).
    elapsed_seconds : float
        Time taken in seconds.

    Returns
    -------
    float
        Throughput (items/s).  If ``elapsed_seconds`` is zero, returns 0.
    """
    if elapsed_seconds <= 0:
        return 0.0
    return n_items / elapsed_seconds


def memory_usage_mb() -> float:
    """Return the current memory usage of the process in megabytes."""
    process = psutil.Process()
    return process.memory_info().rss / (1024 ** 2)


def run_stats(n_items: int, started: float) -> Dict[str, float]:
    """Summarise a run that began at ``started`` (a ``time.perf_counter`` value).

    Parameters
    ----------
    n_items : int
        Number of items processed during the run.
    started : float
        Value of :func:`time.perf_counter` taken when the run began.

    Returns
    -------
    dict
        ``elapsed_s``, ``throughput`` and ``memory_mb`` rounded for reports.
    """
    elapsed = time.perf_counter() - started
    return {
        "elapsed_s": round(elapsed, 4),
        "throughput": round(throughput(n_items, elapsed), 2),
        "memory_mb": round(memory_usage_mb(), 1),
    }
