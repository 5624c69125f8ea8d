"""
completion.py
=============

From residues to global unimodular rows, and from unimodular rows to whole
group elements.

``lift_unital_residue``
    Turn a row that is unital modulo ``n`` into a row over the base ring
    that is unital on the nose, without changing it modulo ``n``.

``complete_row_sl``
    Complete a unimodular row to a determinant-one matrix having that row
    at a chosen position.  The row is reduced to ``e_0`` by column
    operations (Euclid, then a diagonal word); the inverse of the recorded
    operations has the row as its first row.

``complete_row_sp``
    The symplectic analogue.  The reduction uses the elementary symplectic
    maps ``Y_a, Z_a`` on each hyperbolic pair ``(p_a, q_a)`` and ``X_ab``
    between pairs, so every recorded step preserves the form.

All three work over ``Z`` and ``F_p[x]``.
"""

from __future__ import annotations

import logging
from typing import Any, List, Optional, Sequence, Tuple

from ..errors import ContractError, NotUnitalError
from ..groups import ElemFactor, RMatrix, diag_word
from ..rings import BaseRing, Ideal, QuotRing, Residue, RingElem, crt_combine, gcd_all, prime_factors

logger = logging.getLogger(__name__)

# (x, y, t) stands for t * e_xy; one symplectic step is one or two of them
Step = Tuple[Tuple[int, int, RingElem], ...]


def _as_row(row: Sequence[Any], ring: Optional[BaseRing]) -> Tuple[BaseRing, List[RingElem]]:
    if not row:
        raise ContractError("rows must be nonempty")
    if ring is None:
        first = row[0]
        ring = first.ring if isinstance(first, RingElem) else BaseRing.integers()
    return ring, [ring.element(v) for v in row]


# ----------------------------------------------------------------------
# Residue lifting
# ----------------------------------------------------------------------


def lift_unital_residue(row: Sequence[Residue]) -> Tuple[RingElem, ...]:
    """Lift a row unital modulo ``n`` to a unital row over the base ring.

    The representatives are kept except for the first entry, which moves to
    ``r_0 + t n`` with ``t`` chosen prime by prime (CRT) over the primes of
    ``gcd(r_1, ..., r_k)`` that do not divide ``n``.

    Raises
    ------
    NotUnitalError
        If the entries together with ``n`` do not generate the unit ideal.
    """
    if not row:
        raise ContractError("cannot lift an empty row")
    q: QuotRing = row[0].parent
    ring = q.base
    g = q.modulus.generator
    reps = [q(r).rep for r in row]
    if not gcd_all(reps + [g]).is_unit():
        raise NotUnitalError(f"row {[str(r) for r in reps]} is not unital modulo {q.modulus}")
    if gcd_all(reps).is_unit():
        return tuple(reps)
    if len(reps) == 1:
        # only units of the base ring are unital singletons
        for unit in (ring.one, -ring.one):
            if g.divides(reps[0] - unit):
                return (unit,)
        raise NotUnitalError(f"{reps[0]} modulo {q.modulus} has no unit preimage in {ring}")
    if all(r.is_zero() for r in reps[1:]):
        reps[1] = g
    d = gcd_all(reps[1:])
    residues = []
    for prime in prime_factors(d):
        if prime.divides(g):
            continue
        local = QuotRing(Ideal.of(prime))
        residues.append(local((local.one - local(reps[0])) * local(g).inverse()))
    t = crt_combine(residues).rep if residues else ring.zero
    reps[0] = reps[0] + t * g
    logger.debug("lifted unital residue row modulo %s with shift t=%s", q.modulus, t)
    return tuple(reps)


def lift_unital_residue_z(values: Sequence[int], n: int) -> Tuple[int, ...]:
    q = QuotRing.integers_mod(n)
    return tuple(int(v) for v in lift_unital_residue([q(v) for v in values]))


# ----------------------------------------------------------------------
# SL completion
# ----------------------------------------------------------------------


def _euclid_to_pivot(v: List[RingElem], ops: List[ElemFactor], lo: int = 0, hi: Optional[int] = None) -> int:
    """Column Euclid on ``v[lo:hi]`` with ``v_b += t v_a`` steps; returns the pivot index."""
    hi = len(v) if hi is None else hi
    while True:
        nonzero = [j for j in range(lo, hi) if not v[j].is_zero()]
        pivot = min(nonzero, key=lambda j: (v[j].size(), j))
        others = [j for j in nonzero if j != pivot]
        if not others:
            return pivot
        for j in others:
            quo = v[j] // v[pivot]
            ops.append(ElemFactor(pivot, j, -quo))
            v[j] = v[j] - quo * v[pivot]


def _column_op(v: List[RingElem], factor: ElemFactor) -> None:
    v[factor.j] = v[factor.j] + factor.t * v[factor.i]


def _reposition(matrix: RMatrix, i: int) -> RMatrix:
    """Move row 0 to row ``i``; the old row ``i`` moves to row 0 negated."""
    if i == 0:
        return matrix
    rows = list(matrix.rows)
    rows[0], rows[i] = tuple(-e for e in rows[i]), rows[0]
    return RMatrix(matrix.ring, tuple(rows))


def complete_row_sl(row: Sequence[Any], i: int = 0, ring: Optional[BaseRing] = None) -> RMatrix:
    """A determinant-one matrix whose row ``i`` (0-based) is exactly ``row``.

    Raises
    ------
    NotUnitalError
        If the entries of ``row`` do not generate the unit ideal.
    """
    ring, v = _as_row(row, ring)
    n = len(v)
    if not 0 <= i < n:
        raise ContractError(f"row position {i} outside size {n}")
    if not gcd_all(v).is_unit():
        raise NotUnitalError(f"row {[str(e) for e in v]} is not unimodular")
    if n == 1:
        if v[0] != ring.one:
            raise NotUnitalError(f"a 1x1 determinant-one matrix has entry 1, not {v[0]}")
        return RMatrix.identity(ring, 1)

    work = list(v)
    ops: List[ElemFactor] = []
    pivot = _euclid_to_pivot(work, ops)
    if pivot != 0:
        for factor in (ElemFactor(pivot, 0, ring.one), ElemFactor(0, pivot, -ring.one)):
            _column_op(work, factor)
            ops.append(factor)
    u = work[0]
    if u != ring.one:
        # right multiplication by the product of a word applies its factors in order
        for factor in diag_word(ring, u.inverse(), n, 0).factors:
            _column_op(work, factor)
            ops.append(factor)
    if work[0] != ring.one or any(not e.is_zero() for e in work[1:]):
        raise ContractError("row reduction did not reach e_0")

    # v * E_1 ... E_r = e_0, so (E_1 ... E_r)^-1 = E_r^-1 ... E_1^-1 has first row v
    rows = [list(r) for r in RMatrix.identity(ring, n).rows]
    for factor in ops:
        factor.inverse().apply_rows(rows)
    completed = RMatrix(ring, tuple(tuple(r) for r in rows))
    return _reposition(completed, i)


# ----------------------------------------------------------------------
# Sp completion
# ----------------------------------------------------------------------


def _y_step(k: int, a: int, t: RingElem) -> Step:
    return ((k + a, a, t),)


def _z_step(k: int, a: int, t: RingElem) -> Step:
    return ((a, k + a, t),)


def _x_step(k: int, a: int, b: int, t: RingElem) -> Step:
    return ((a, b, t), (k + b, k + a, -t))


def _apply_step(v: List[RingElem], step: Step) -> None:
    # v <- v (Id + sum t e_xy); the pieces of one step never feed each other
    updates = [(y, t * v[x]) for x, y, t in step]
    for y, delta in updates:
        v[y] = v[y] + delta


def _pair_euclid(v: List[RingElem], k: int, a: int, steps: List[Step]) -> None:
    one = v[0].ring.one
    while not v[k + a].is_zero():
        p, q = v[a], v[k + a]
        if p.is_zero():
            step_list = [_y_step(k, a, one), _z_step(k, a, -one)]
        elif p.size() <= q.size():
            step_list = [_z_step(k, a, -(q // p))]
        else:
            step_list = [_y_step(k, a, -(p // q))]
        for step in step_list:
            _apply_step(v, step)
            steps.append(step)


def _sp_permutation(ring: BaseRing, k: int, i: int) -> RMatrix:
    """Symplectic ``Q`` whose row ``i`` is ``e_0``."""
    j = i % k
    perm = list(range(k))
    perm[0], perm[j] = perm[j], perm[0]
    zero, one = ring.zero, ring.one
    rows = [[zero] * (2 * k) for _ in range(2 * k)]
    for a in range(k):
        rows[a][perm[a]] = one
        rows[k + a][k + perm[a]] = one
    swap = RMatrix(ring, tuple(tuple(r) for r in rows))
    if i < k:
        return swap
    quarter = [list(r) for r in RMatrix.identity(ring, 2 * k).rows]
    quarter[0][0], quarter[0][k] = zero, -one
    quarter[k][0], quarter[k][k] = one, zero
    return swap @ RMatrix(ring, tuple(tuple(r) for r in quarter))


def complete_row_sp(row: Sequence[Any], i: int = 0, ring: Optional[BaseRing] = None) -> RMatrix:
    """A symplectic ``2k x 2k`` matrix whose row ``i`` (0-based) is exactly ``row``.

    Raises
    ------
    NotUnitalError
        If the entries of ``row`` do not generate the unit ideal.
    """
    ring, v = _as_row(row, ring)
    if len(v) % 2:
        raise ContractError(f"symplectic rows have even length, got {len(v)}")
    k = len(v) // 2
    if not 0 <= i < 2 * k:
        raise ContractError(f"row position {i} outside size {2 * k}")
    if not gcd_all(v).is_unit():
        raise NotUnitalError(f"row {[str(e) for e in v]} is not unimodular")

    work = list(v)
    steps: List[Step] = []
    for a in range(k):
        _pair_euclid(work, k, a, steps)
    factors: List[ElemFactor] = []
    pivot = _euclid_to_pivot(work, factors, 0, k)
    # p_b += t p_a is X_ab(t); the q half is zero so its companion update is inert
    steps.extend(_x_step(k, f.i, f.j, f.t) for f in factors)
    if pivot != 0:
        for step in (_x_step(k, pivot, 0, ring.one), _x_step(k, 0, pivot, -ring.one)):
            _apply_step(work, step)
            steps.append(step)
    u = work[0]
    if u != ring.one:
        # diag(u^-1, u) on the plane (p_0, q_0): local index 0 -> 0, 1 -> k
        local = (0, k)
        for factor in diag_word(ring, u.inverse(), 2, 0).factors:
            step = ((local[factor.i], local[factor.j], factor.t),)
            _apply_step(work, step)
            steps.append(step)
    if work[0] != ring.one or any(not e.is_zero() for e in work[1:]):
        raise ContractError("symplectic row reduction did not reach e_0")

    rows = [list(r) for r in RMatrix.identity(ring, 2 * k).rows]
    for step in steps:
        for x, y, t in step:
            ElemFactor(x, y, -t).apply_rows(rows)
    completed = RMatrix(ring, tuple(tuple(r) for r in rows))
    if i == 0:
        return completed
    return _sp_permutation(ring, k, i) @ completed
