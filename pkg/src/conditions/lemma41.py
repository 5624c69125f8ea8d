"""
lemma41.py
==========

Checks of the two congruence identities for co-maximal ideals ``I, J`` of
``Z``:

* ``Γ(I) ∩ Γ(J) = Γ(IJ)`` as membership tests on sampled integral elements;
* ``Γ(I) Γ(J) = G``: every sampled ``B`` factors as ``B = Y G`` with
  ``Y ≡ Id (mod I)`` and ``G ≡ Id (mod J)``, where
  ``G = lift(CRT(B mod I, Id mod J))`` and ``Y = B G^-1``.

Both rest on ``G(Z/IJ) ≅ G(Z/I) x G(Z/J)``, which is confirmed first by
comparing group orders.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from ..config import current_settings
from ..errors import NotComaximalError
from ..evaluation.metrics import run_stats
from ..groups import (
    RMatrix,
    enumerate_sl,
    enumerate_sp,
    inverse,
    random_sl_stream,
    random_sp_stream,
    random_word,
    symplectic_inverse,
    word_to_matrix,
)
from ..lifting import CongruenceLevel, GroupKind, crt_matrix, sap_lift_sl, sap_lift_sp
from ..rings import BaseRing, Ideal, QuotRing, is_comaximal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Lemma41Report:
    kind: GroupKind
    k: int
    first: int
    second: int
    orders: Dict[str, int]
    factorizations: int
    factorizations_ok: int
    intersections: int
    intersections_ok: int
    seed: int
    stats: Dict[str, float] = field(default_factory=dict, compare=False)

    @property
    def order_identity(self) -> bool:
        return self.orders["product"] == self.orders["first"] * self.orders["second"]

    @property
    def verdict(self) -> bool:
        return (
            self.order_identity
            and self.factorizations == self.factorizations_ok
            and self.intersections == self.intersections_ok
        )

    def to_json(self) -> dict:
        return {
            "group": {"kind": self.kind.value, "k": self.k},
            "ideals": {"first": str(self.first), "second": str(self.second)},
            "orders": self.orders,
            "order_identity": self.order_identity,
            "factorization": f"{self.factorizations_ok}/{self.factorizations}",
            "intersection": f"{self.intersections_ok}/{self.intersections}",
            "seed": self.seed,
            "verdict": self.verdict,
            "stats": self.stats,
        }


def _order(kind: GroupKind, k: int, n: int, guard: Optional[int]) -> int:
    q = QuotRing.integers_mod(n)
    if kind is GroupKind.SL:
        return len(enumerate_sl(q, k + 1, guard))
    return len(enumerate_sp(q, k, guard))


def factor_through(
    matrix: RMatrix, first: Ideal, second: Ideal, kind: GroupKind
) -> Tuple[RMatrix, RMatrix]:
    """``(Y, G)`` with ``matrix = Y G``, ``Y ≡ Id (mod first)``, ``G ≡ Id (mod second)``."""
    dimension = matrix.n_rows
    target = crt_matrix([matrix.reduce(QuotRing(first)), RMatrix.identity(QuotRing(second), dimension)])
    if kind is GroupKind.SL:
        g = sap_lift_sl(target)
        y = matrix @ inverse(g)
    else:
        g = sap_lift_sp(target)
        y = matrix @ symplectic_inverse(g)
    return y, g


def lemma41_check(
    first: int,
    second: int,
    kind: Union[GroupKind, str] = GroupKind.SL,
    k: int = 1,
    samples: Optional[int] = None,
    seed: int = 0,
    guard: Optional[int] = None,
) -> Lemma41Report:
    """Order identity plus sampled factorization and intersection checks.

    Raises
    ------
    NotComaximalError
        If ``gcd(first, second) != 1``.
    GuardExceededError
        If ``G_k(Z/first*second)`` is too large to enumerate.
    """
    kind = GroupKind(kind)
    ring = BaseRing.integers()
    i_first, i_second = Ideal.principal(ring, first), Ideal.principal(ring, second)
    if not is_comaximal(i_first, i_second):
        raise NotComaximalError(f"{i_first} and {i_second} are not co-maximal", pair=(0, 1))
    samples = current_settings().samples if samples is None else samples
    started = time.perf_counter()
    orders = {
        "first": _order(kind, k, first, guard),
        "second": _order(kind, k, second, guard),
        "product": _order(kind, k, first * second, guard),
    }

    levels = [CongruenceLevel(i, kind, k) for i in (i_first, i_second, i_first * i_second)]
    stream = random_sl_stream(ring, k + 1, seed, samples) if kind is GroupKind.SL else random_sp_stream(ring, k, seed, samples)
    factorizations_ok = 0
    checked: List[RMatrix] = [RMatrix.identity(ring, levels[0].dimension)]
    for b in stream:
        y, g = factor_through(b, i_first, i_second, kind)
        if y @ g == b and levels[0].contains(y) and levels[1].contains(g):
            factorizations_ok += 1
        checked.extend([b, y, g, g @ y])
    level = first * second
    if kind is GroupKind.SL:
        checked.extend(random_sl_stream(ring, k + 1, seed + 1, samples, scale=level))
    else:
        checked.extend(random_sp_stream(ring, k, seed + 1, samples, scale=level))

    intersections_ok = sum(
        1
        for m in checked
        if (levels[0].contains(m) and levels[1].contains(m)) == levels[2].contains(m)
    )
    report = Lemma41Report(
        kind=kind,
        k=k,
        first=first,
        second=second,
        orders=orders,
        factorizations=samples,
        factorizations_ok=factorizations_ok,
        intersections=len(checked),
        intersections_ok=intersections_ok,
        seed=seed,
        stats=run_stats(samples, started),
    )
    logger.info("co-maximal check %s k=%d (%d, %d): %s", kind.value, k, first, second, report.verdict)
    return report


def sampled_membership(first: int, second: int, samples: int, seed: int, size: int = 2) -> Dict[str, int]:
    """Count agreement of ``Γ(I) ∩ Γ(J)`` and ``Γ(IJ)`` membership on sampled ``SL_size(Z)`` elements.

    Each round draws four elements from one seeded generator: a random
    word, and words with entries divisible by ``first``, ``second`` and
    ``first * second``.  The last three lie in the respective congruence
    subgroups, so both sides of the identity are exercised.
    """
    ring = BaseRing.integers()
    levels = [
        CongruenceLevel(Ideal.principal(ring, n), GroupKind.SL, size - 1)
        for n in (first, second, first * second)
    ]
    rng = np.random.default_rng(seed)
    length = current_settings().word_length
    agree = members = drawn = 0
    for _ in range(samples):
        for scale in (1, first, second, first * second):
            b = word_to_matrix(random_word(ring, size, rng, length, scale))
            both = levels[0].contains(b) and levels[1].contains(b)
            agree += both == levels[2].contains(b)
            members += levels[2].contains(b)
            drawn += 1
    return {"samples": drawn, "agree": agree, "in_product_level": members}
