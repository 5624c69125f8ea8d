"""
enumeration.py
==============

Exhaustive listings of ``SL_n(q)`` and ``Sp_2k(q)`` for small finite
quotient rings, and seeded random elements of both groups.

The listings are oracles for the closure search and the lifting checks, so
they are deliberately naive: ``SL_n`` scans every matrix and keeps the
determinant-one ones, ``Sp_2k`` picks rows one at a time subject to the
pairing ``<r_a, r_b> = Omega_ab``.  Both stop with
:class:`~src.errors.GuardExceededError` instead of running unbounded.
"""

from __future__ import annotations

import itertools
import logging
from typing import Any, Iterator, List, Optional, Sequence

import numpy as np
from tqdm import tqdm

from ..config import current_settings
from ..errors import ContractError, GuardExceededError
from ..rings import BaseRing, QuotRing
from .matrix import Entry, RMatrix, Ring, coerce, det, form, symplectic_elementary
from .words import ElemWord, word_to_matrix

logger = logging.getLogger(__name__)


def _int_det(rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * a * _int_det(minor)
    return total


def enumerate_sl(q: QuotRing, n: int, guard: Optional[int] = None, progress: bool = False) -> List[RMatrix]:
    """All of ``SL_n(q)`` in ascending :meth:`RMatrix.sort_key` order.

    Raises
    ------
    GuardExceededError
        If ``|q|^(n*n)`` candidates exceed ``guard``.
    """
    q.require_finite()
    if n < 1:
        raise ContractError("matrix size must be positive")
    guard = current_settings().group_candidates if guard is None else guard
    candidates = q.size ** (n * n)
    if candidates > guard:
        raise GuardExceededError(
            f"SL_{n}({q}) scan needs {candidates} candidates (guard {guard})", guard=guard
        )
    out: List[RMatrix] = []
    cells = itertools.product(range(q.size), repeat=n * n)
    if q.base.is_integers:
        m = q.size
        for flat in tqdm(cells, total=candidates, desc=f"SL_{n}({q})", disable=not progress):
            rows = [flat[i * n:(i + 1) * n] for i in range(n)]
            if _int_det(rows) % m == 1 % m:
                out.append(RMatrix.from_values(q, rows))
    else:
        elements = list(q.elements())
        one = q.one
        for flat in tqdm(cells, total=candidates, desc=f"SL_{n}({q})", disable=not progress):
            rows = tuple(tuple(elements[flat[i * n + j]] for j in range(n)) for i in range(n))
            matrix = RMatrix(q, rows)
            if det(matrix) == one:
                out.append(matrix)
    logger.debug("enumerated %d elements of SL_%d(%s)", len(out), n, q)
    return sorted(out, key=RMatrix.sort_key)


def enumerate_sp(q: QuotRing, k: int, guard: Optional[int] = None) -> List[RMatrix]:
    """All of ``Sp_2k(q)`` by row-wise backtracking on the symplectic pairing.

    ``guard`` bounds the number of partial row choices examined.
    """
    q.require_finite()
    if k < 1:
        raise ContractError("symplectic rank must be positive")
    guard = current_settings().group_candidates if guard is None else guard
    dim = 2 * k
    elements = list(q.elements())
    vectors = [tuple(v) for v in itertools.product(elements, repeat=dim)]
    zero, one = q.zero, q.one

    def target(a: int, b: int) -> Entry:
        if b == a + k:
            return one
        if a == b + k:
            return -one
        return zero

    out: List[RMatrix] = []
    examined = 0

    def extend(chosen: List[tuple]) -> None:
        nonlocal examined
        if len(chosen) == dim:
            out.append(RMatrix(q, tuple(chosen)))
            return
        b = len(chosen)
        for v in vectors:
            examined += 1
            if examined > guard:
                raise GuardExceededError(
                    f"Sp_{dim}({q}) backtracking exceeded {guard} row choices",
                    guard=guard,
                    partial=sorted(out, key=RMatrix.sort_key),
                )
            if all(form(chosen[a], v) == target(a, b) for a in range(b)):
                chosen.append(v)
                extend(chosen)
                chosen.pop()

    extend([])
    logger.debug("enumerated %d elements of Sp_%d(%s)", len(out), dim, q)
    return sorted(out, key=RMatrix.sort_key)


# ----------------------------------------------------------------------
# Random elements
# ----------------------------------------------------------------------


def _random_entry(ring: Ring, rng: np.random.Generator) -> Entry:
    if isinstance(ring, QuotRing) and ring.finite:
        if ring.base.is_integers:
            return ring(int(rng.integers(0, ring.size)))
        p = ring.base.characteristic
        degree = ring.modulus.generator.degree
        return ring(tuple(int(c) for c in rng.integers(0, p, size=degree)))
    base: BaseRing = ring.base if isinstance(ring, QuotRing) else ring
    if base.is_integers:
        return coerce(ring, int(rng.integers(-5, 6)))
    return coerce(ring, tuple(int(c) for c in rng.integers(0, base.characteristic, size=3)))


def random_word(ring: Ring, n: int, rng: np.random.Generator, length: int, scale: Any = 1) -> ElemWord:
    """A word of ``length`` elementary factors with random indices and entries.

    Every entry is a multiple of ``scale``, so the product is congruent to
    the identity modulo ``scale``.
    """
    if n < 2:
        return ElemWord(ring, n)
    factor = coerce(ring, scale)
    triples = []
    for _ in range(length):
        i, j = (int(v) for v in rng.choice(n, size=2, replace=False))
        triples.append((i, j, factor * _random_entry(ring, rng)))
    return ElemWord.build(ring, n, triples)


def random_sl(ring: Ring, n: int, seed: int, length: Optional[int] = None) -> RMatrix:
    """A seeded random element of ``SL_n(ring)`` as a random elementary word."""
    rng = np.random.default_rng(seed)
    length = current_settings().word_length if length is None else length
    return word_to_matrix(random_word(ring, n, rng, length))


def random_sl_stream(
    ring: Ring, n: int, seed: int, count: int, length: Optional[int] = None, scale: Any = 1
) -> Iterator[RMatrix]:
    """``count`` random elements from one generator seeded once.

    With ``scale`` set the elements lie in the congruence subgroup of that level.
    """
    rng = np.random.default_rng(seed)
    length = current_settings().word_length if length is None else length
    for _ in range(count):
        yield word_to_matrix(random_word(ring, n, rng, length, scale))


def _random_sp_from(ring: Ring, k: int, rng: np.random.Generator, length: int, scale: Any = 1) -> RMatrix:
    matrix = RMatrix.identity(ring, 2 * k)
    factor = coerce(ring, scale)
    kinds = ["Y", "Z"] + (["X"] if k > 1 else [])
    for _ in range(length):
        kind = kinds[int(rng.integers(0, len(kinds)))]
        t: Any = factor * _random_entry(ring, rng)
        if kind == "X":
            a, b = (int(v) for v in rng.choice(k, size=2, replace=False))
            gen = symplectic_elementary(ring, k, "X", a, t, b)
        else:
            gen = symplectic_elementary(ring, k, kind, int(rng.integers(0, k)), t)
        matrix = matrix @ gen
    return matrix


def random_sp(ring: Ring, k: int, seed: int, length: Optional[int] = None) -> RMatrix:
    """A seeded random element of ``Sp_2k(ring)`` from elementary symplectic generators."""
    rng = np.random.default_rng(seed)
    return _random_sp_from(ring, k, rng, current_settings().word_length if length is None else length)


def random_sp_stream(
    ring: Ring, k: int, seed: int, count: int, length: Optional[int] = None, scale: Any = 1
) -> Iterator[RMatrix]:
    rng = np.random.default_rng(seed)
    length = current_settings().word_length if length is None else length
    for _ in range(count):
        yield _random_sp_from(ring, k, rng, length, scale)
