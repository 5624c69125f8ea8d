"""
parallel.py
===========

Thin wrapper around :class:`joblib.Parallel` used by the exhaustive scans.
Results always come back in input order, so reports assembled from them
are identical for any worker count.
"""

from __future__ import annotations

from typing import Callable, List, Optional, Sequence, TypeVar

from joblib import Parallel, delayed

from .config import current_settings

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Sequence[T], n_jobs: Optional[int] = None) -> List[R]:
    """Apply ``func`` to every item, optionally across joblib workers.

    Parameters
    ----------
    func : callable
        A picklable, module-level function.
    items : sequence
        Inputs; the output list follows their order.
    n_jobs : int, optional
        Worker count; ``1`` runs in-process without joblib overhead.
        Defaults to ``parallel.n_jobs`` of the active configuration.
    """
    if n_jobs is None:
        n_jobs = current_settings().n_jobs
    if n_jobs == 1 or len(items) < 2:
        return [func(item) for item in items]
    return list(Parallel(n_jobs=n_jobs)(delayed(func)(item) for item in items))
