"""
pipelines.py
============

Congruence-subgroup elements with prescribed rows.

Given unimodular integer rows ``a_i``, mutually co-maximal ideals ``I_i``
and a level ``J`` co-maximal with their product, build ``B`` in the
level-``J`` congruence subgroup whose ``i``-th row is congruent to ``a_i``
modulo ``I_i``:

1. complete each row to a group element ``D_i`` with ``a_i`` in row ``i``,
   reduced modulo ``I_i``;
2. glue ``D_0, ..., D_k`` and ``Id mod J`` with the Chinese remainder theorem;
3. lift the glued matrix to the base ring.

Rows whose ideal is the unit ideal carry no constraint and are skipped.
Weight vectors never enter: exact row congruence implies equality in every
weighted projective space.
"""

from __future__ import annotations

import itertools
import logging
from typing import Any, Callable, List, Sequence, Tuple, Union

from ..errors import ContractError, NotComaximalError, NotUnitalError
from ..groups import RMatrix
from ..rings import BaseRing, Ideal, QuotRing, RingElem, gcd_all, is_comaximal
from .assembly import crt_matrix
from .certificate import CongruenceLevel, GroupKind, LiftCertificate
from .completion import complete_row_sl, complete_row_sp
from .sap import sap_lift_sl, sap_lift_sp

logger = logging.getLogger(__name__)

IdealLike = Union[int, Ideal]


def _ideal(ring: BaseRing, value: IdealLike) -> Ideal:
    return value if isinstance(value, Ideal) else Ideal.principal(ring, value)


def _check_inputs(
    ring: BaseRing, rows: Sequence[Sequence[Any]], ideals: Sequence[IdealLike], level: IdealLike, dimension: int
) -> Tuple[List[Tuple[RingElem, ...]], List[Ideal], Ideal]:
    if len(rows) != dimension or len(ideals) != dimension:
        raise ContractError(f"expected {dimension} rows and ideals, got {len(rows)} and {len(ideals)}")
    parsed_rows = []
    for i, row in enumerate(rows):
        if len(row) != dimension:
            raise ContractError(f"row {i} has length {len(row)}, expected {dimension}")
        elems = tuple(ring.element(v) for v in row)
        if not gcd_all(elems).is_unit():
            raise NotUnitalError(f"row {i} {[str(e) for e in elems]} is not unimodular")
        parsed_rows.append(elems)
    parsed_ideals = [_ideal(ring, i) for i in ideals]
    level_ideal = _ideal(ring, level)
    everything = parsed_ideals + [level_ideal]
    for a, b in itertools.combinations(range(len(everything)), 2):
        if not is_comaximal(everything[a], everything[b]):
            raise NotComaximalError(
                f"ideals {everything[a]} and {everything[b]} (positions {a}, {b}; "
                f"position {dimension} is the level) are not co-maximal",
                pair=(a, b),
            )
    return parsed_rows, parsed_ideals, level_ideal


def _run(
    kind: GroupKind,
    k: int,
    rows: Sequence[Sequence[Any]],
    ideals: Sequence[IdealLike],
    level: IdealLike,
    complete: Callable[..., RMatrix],
    lift: Callable[[RMatrix], RMatrix],
    ring: BaseRing,
) -> LiftCertificate:
    dimension = k + 1 if kind is GroupKind.SL else 2 * k
    parsed_rows, parsed_ideals, level_ideal = _check_inputs(ring, rows, ideals, level, dimension)
    targets: List[RMatrix] = []
    for i, (row, ideal) in enumerate(zip(parsed_rows, parsed_ideals)):
        if ideal.is_unit:
            continue
        targets.append(complete(row, i, ring).reduce(QuotRing(ideal)))
    if level_ideal.is_proper:
        targets.append(RMatrix.identity(QuotRing(level_ideal), dimension))
    if targets:
        lifted = lift(crt_matrix(targets))
    else:
        lifted = RMatrix.identity(ring, dimension)
    certificate = LiftCertificate.issue(CongruenceLevel(level_ideal, kind, k), lifted, parsed_rows, parsed_ideals)
    if not certificate.valid:
        raise ContractError(f"{kind.value} pipeline produced a failing certificate: {certificate.verdicts}")
    logger.debug("%s lift at level %s with %d constraints", kind.value, level_ideal, len(targets))
    return certificate


def omega_lift(
    rows: Sequence[Sequence[Any]],
    ideals: Sequence[IdealLike],
    level: IdealLike,
    ring: BaseRing = BaseRing.integers(),
) -> LiftCertificate:
    """``B`` in ``SL_{k+1}`` with ``B ≡ Id (mod J)`` and ``row_i(B) ≡ a_i (mod I_i)``.

    Parameters
    ----------
    rows : sequence of sequences
        ``k + 1`` unimodular rows of length ``k + 1``.
    ideals : sequence
        ``I_0, ..., I_k`` as generators or :class:`Ideal`; mutually co-maximal.
    level : int or Ideal
        ``J``, co-maximal with every ``I_i``.

    Raises
    ------
    NotComaximalError
        With ``pair`` naming the offending positions (the level is last).
    NotUnitalError
        If a row is not unimodular.
    """
    if not rows:
        raise ContractError("omega_lift needs at least one row")
    return _run(GroupKind.SL, len(rows) - 1, rows, ideals, level, complete_row_sl, sap_lift_sl, ring)


def sigma_lift(
    rows: Sequence[Sequence[Any]],
    ideals: Sequence[IdealLike],
    level: IdealLike,
    ring: BaseRing = BaseRing.integers(),
) -> LiftCertificate:
    """``B`` in ``Sp_{2k}`` with ``B ≡ Id (mod J)`` and ``row_i(B) ≡ a_i (mod I_i)``."""
    if not rows or len(rows) % 2:
        raise ContractError(f"sigma_lift needs an even, positive number of rows, got {len(rows)}")
    return _run(GroupKind.SP, len(rows) // 2, rows, ideals, level, complete_row_sp, sap_lift_sp, ring)


def lift_for(kind: GroupKind) -> Callable[..., LiftCertificate]:
    return omega_lift if kind is GroupKind.SL else sigma_lift
