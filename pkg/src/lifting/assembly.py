"""Entrywise Chinese remainder assembly of matrices."""

from __future__ import annotations

from typing import Sequence

from ..errors import ContractError, RingMismatchError
from ..groups import RMatrix
from ..rings import QuotRing, crt_combine


def crt_matrix(targets: Sequence[RMatrix]) -> RMatrix:
    """The matrix modulo ``prod I_i`` reducing to ``targets[i]`` modulo ``I_i``.

    Raises
    ------
    NotComaximalError
        If two moduli are not co-maximal (``pair`` gives their positions).
    ContractError
        On an empty list or mismatched shapes.
    """
    if not targets:
        raise ContractError("crt_matrix needs at least one target")
    shape = targets[0].shape
    for t in targets:
        if not isinstance(t.ring, QuotRing):
            raise RingMismatchError(f"CRT targets live in quotient rings, got {t.ring}")
        if t.shape != shape:
            raise ContractError(f"CRT targets have shapes {shape} and {t.shape}")
    if len(targets) == 1:
        return targets[0]
    # combining zeros validates co-maximality and yields the product ring
    ring = crt_combine([t.ring.zero for t in targets]).parent
    n_rows, n_cols = shape
    rows = tuple(
        tuple(crt_combine([t[i, j] for t in targets]) for j in range(n_cols))
        for i in range(n_rows)
    )
    return RMatrix(ring, rows)
