"""
closure.py
==========

Breadth-first closure of the elementary matrices ``E_ij(t)`` inside
``SL_n(q)`` for a finite quotient ring ``q``.

A ring is a GE_n-ring when this closure is all of ``SL_n(q)``;
:func:`is_ge_ring` decides that by comparing against the exhaustive listing.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, List, Optional

from ..config import current_settings
from ..errors import ContractError, GuardExceededError
from ..rings import QuotRing
from .enumeration import enumerate_sl
from .matrix import RMatrix
from .words import ElemFactor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClosureResult:
    """Outcome of :func:`ge_closure`.

    ``overflowed`` is set when the cap stopped the search; ``matrices`` then
    holds the partial closure found so far.
    """

    ring: QuotRing
    n: int
    matrices: FrozenSet[RMatrix]
    overflowed: bool
    cap: int

    @property
    def size(self) -> int:
        return len(self.matrices)

    def sorted(self) -> List[RMatrix]:
        return sorted(self.matrices, key=RMatrix.sort_key)

    def raise_for_overflow(self) -> "ClosureResult":
        if self.overflowed:
            raise GuardExceededError(
                f"closure of elementary matrices in SL_{self.n}({self.ring}) exceeded {self.cap} elements",
                guard=self.cap,
                partial=self,
            )
        return self

    def to_json(self) -> dict:
        return {"ring": str(self.ring), "n": self.n, "size": self.size, "overflowed": self.overflowed, "cap": self.cap}


def elementary_generators(q: QuotRing, n: int) -> List[ElemFactor]:
    """Every ``E_ij(t)`` with ``i != j`` and ``t != 0``."""
    return [
        ElemFactor(i, j, t)
        for i in range(n)
        for j in range(n)
        if i != j
        for t in q.elements()
        if not t.is_zero()
    ]


def ge_closure(q: QuotRing, n: int, cap: Optional[int] = None, strict: bool = False) -> ClosureResult:
    """Closure of ``{E_ij(t)}`` under multiplication, starting from the identity.

    Parameters
    ----------
    q : QuotRing
        A finite quotient ring.
    n : int
        Matrix size.
    cap : int, optional
        Maximum number of elements; defaults to ``guards.closure_elements``.
    strict : bool
        Raise :class:`GuardExceededError` (carrying the partial result)
        instead of returning a flagged result on overflow.
    """
    q.require_finite()
    if n < 1:
        raise ContractError("matrix size must be positive")
    cap = current_settings().closure_elements if cap is None else cap
    identity = RMatrix.identity(q, n)
    seen = {identity}
    frontier = deque([identity])
    generators = elementary_generators(q, n)
    overflowed = False
    while frontier and not overflowed:
        current = frontier.popleft()
        for factor in generators:
            rows = [list(r) for r in current.rows]
            factor.apply_rows(rows)
            nxt = RMatrix(q, tuple(tuple(r) for r in rows))
            if nxt in seen:
                continue
            if len(seen) >= cap:
                overflowed = True
                break
            seen.add(nxt)
            frontier.append(nxt)
    result = ClosureResult(q, n, frozenset(seen), overflowed, cap)
    logger.info("closure in SL_%d(%s): %d elements%s", n, q, result.size, " (capped)" if overflowed else "")
    return result.raise_for_overflow() if strict else result


def is_ge_ring(q: QuotRing, n: int, cap: Optional[int] = None) -> bool:
    """True iff the elementary matrices generate all of ``SL_n(q)``."""
    closure = ge_closure(q, n, cap, strict=True)
    full = enumerate_sl(q, n)
    return closure.size == len(full) and closure.matrices == frozenset(full)
