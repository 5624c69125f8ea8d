"""
sap_check.py
============

Exhaustive strong-approximation checks on small groups: every element of
``SL_{k+1}(Z/n)`` or ``Sp_2k(Z/n)`` is lifted and the lift is reduced back.

:func:`sap_ge_converse_check` additionally decomposes each integral lift into
elementary matrices over ``Z`` and confirms that the reduced word reproduces
the original element.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, Optional, Tuple, Union

from ..errors import CongruenceLiftError, ContractError
from ..evaluation.metrics import run_stats
from ..groups import RMatrix, det, elementary_decompose, enumerate_sl, enumerate_sp, is_symplectic, word_to_matrix
from ..lifting import GroupKind, sap_lift_sl, sap_lift_sp
from ..parallel import ordered_map
from ..rings import QuotRing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SapReport:
    """Coverage of an exhaustive lift-and-reduce run."""

    kind: GroupKind
    k: int
    modulus: str
    total: int
    lifted: int
    failures: Tuple[RMatrix, ...] = ()
    stats: Dict[str, float] = field(default_factory=dict, compare=False)

    @property
    def verdict(self) -> bool:
        return self.total == self.lifted

    @property
    def dimension(self) -> int:
        return self.k + 1 if self.kind is GroupKind.SL else 2 * self.k

    def to_json(self) -> dict:
        return {
            "group": {"kind": self.kind.value, "k": self.k, "dimension": self.dimension},
            "modulus": self.modulus,
            "verdict": self.verdict,
            "coverage": f"{self.lifted}/{self.total}",
            "total": self.total,
            "lifted": self.lifted,
            "failures": [m.to_json() for m in self.failures],
            "stats": self.stats,
        }


def _as_quotient(n: Union[int, QuotRing]) -> QuotRing:
    return n if isinstance(n, QuotRing) else QuotRing.integers_mod(n)


def _round_trip(matrix: RMatrix, kind: GroupKind) -> bool:
    q = matrix.ring
    try:
        if kind is GroupKind.SL:
            lifted = sap_lift_sl(matrix)
            in_group = det(lifted) == lifted.ring.one
        else:
            lifted = sap_lift_sp(matrix)
            in_group = is_symplectic(lifted)
    except CongruenceLiftError as exc:
        logger.warning("lift failed for %s: %s", matrix, exc)
        return False
    return in_group and lifted.reduce(q) == matrix


def _converse_round_trip(matrix: RMatrix) -> bool:
    q = matrix.ring
    word = elementary_decompose(sap_lift_sl(matrix))
    return word_to_matrix(word.reduce(q)) == matrix


def _group_elements(kind: GroupKind, k: int, q: QuotRing, guard: Optional[int]):
    if k < 1:
        raise ContractError("rank parameter k must be positive")
    if kind is GroupKind.SL:
        return enumerate_sl(q, k + 1, guard)
    return enumerate_sp(q, k, guard)


def sap_check_small(
    kind: Union[GroupKind, str],
    k: int,
    n: Union[int, QuotRing],
    guard: Optional[int] = None,
    n_jobs: Optional[int] = None,
) -> SapReport:
    """Lift every element of ``G_k(Z/n)`` and check ``reduce(lift(A)) == A``.

    ``SL`` uses dimension ``k + 1`` and ``SP`` uses ``2k``.

    Raises
    ------
    GuardExceededError
        If the group is too large to enumerate.
    """
    kind = GroupKind(kind)
    q = _as_quotient(n)
    started = time.perf_counter()
    elements = _group_elements(kind, k, q, guard)
    outcomes = ordered_map(partial(_round_trip, kind=kind), elements, n_jobs)
    failures = tuple(m for m, ok in zip(elements, outcomes) if not ok)
    report = SapReport(
        kind=kind,
        k=k,
        modulus=str(q.modulus.generator),
        total=len(elements),
        lifted=len(elements) - len(failures),
        failures=failures,
        stats=run_stats(len(elements), started),
    )
    logger.info("SAP %s k=%d over %s: %d/%d", kind.value, k, q, report.lifted, report.total)
    return report


def sap_ge_converse_check(
    n: Union[int, QuotRing],
    size: int,
    guard: Optional[int] = None,
    n_jobs: Optional[int] = None,
) -> SapReport:
    """For every ``A`` in ``SL_size(Z/n)``: decompose its integral lift and reduce the word."""
    q = _as_quotient(n)
    started = time.perf_counter()
    elements = enumerate_sl(q, size, guard)
    outcomes = ordered_map(_converse_round_trip, elements, n_jobs)
    failures = tuple(m for m, ok in zip(elements, outcomes) if not ok)
    return SapReport(
        kind=GroupKind.SL,
        k=size - 1,
        modulus=str(q.modulus.generator),
        total=len(elements),
        lifted=len(elements) - len(failures),
        failures=failures,
        stats=run_stats(len(elements), started),
    )
