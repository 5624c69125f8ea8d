"""
decompose.py
============

Factorisation of determinant-one matrices into elementary words.

The matrix is driven to the identity by row operations (left
multiplications by ``E_ij(t)``); the inverses of the recorded operations,
in order, form a word whose product is the input.

* Over a Euclidean base ring (``Z``, ``F_p[x]``) each column is cleared by
  the Euclidean algorithm on its entries and the surviving pivot is moved
  up with transposition words.
* Over a finite quotient ``R/<g>`` the pivot is made a unit directly: the
  smallest row index holding a unit is added into the pivot row, and when
  the column holds no unit a unital-set-condition witness combines the
  lower rows into one.

Both paths end by clearing above the diagonal and removing the remaining
diagonal units with ``diag_word``.
"""

from __future__ import annotations

import logging
from typing import Any, List, Tuple

from ..errors import ContractError, DeterminantError, UnsupportedRingError
from ..rings import Ideal, QuotRing
from .matrix import Entry, RMatrix, Ring, coerce, det
from .words import ElemFactor, ElemWord, diag_word, transposition_word

logger = logging.getLogger(__name__)


class _RowReducer:
    """Mutable working copy of a matrix that records its row operations."""

    def __init__(self, matrix: RMatrix) -> None:
        self.ring: Ring = matrix.ring
        self.n = matrix.n_rows
        self.rows: List[List[Entry]] = [list(r) for r in matrix.rows]
        self.ops: List[ElemFactor] = []

    def add(self, i: int, j: int, t: Any) -> None:
        """``row_i += t * row_j``."""
        factor = ElemFactor(i, j, coerce(self.ring, t))
        if factor.t.is_zero():
            return
        factor.apply_rows(self.rows)
        self.ops.append(factor)

    def apply(self, word: ElemWord) -> None:
        """Left-multiply by the product of ``word``."""
        for factor in reversed(word.factors):
            self.add(factor.i, factor.j, factor.t)

    def word(self) -> ElemWord:
        # E_r ... E_1 M = Id  gives  M = E_1^-1 ... E_r^-1
        return ElemWord(self.ring, self.n, tuple(f.inverse() for f in self.ops))

    def entry(self, i: int, j: int) -> Entry:
        return self.rows[i][j]


def _euclid_column(red: _RowReducer, c: int) -> None:
    while True:
        nonzero = [r for r in range(c, red.n) if not red.entry(r, c).is_zero()]
        if not nonzero:
            raise DeterminantError("column without a pivot; determinant is not one")
        pivot = min(nonzero, key=lambda r: (red.entry(r, c).size(), r))
        others = [r for r in nonzero if r != pivot]
        if not others:
            break
        for r in others:
            q = red.entry(r, c) // red.entry(pivot, c)
            red.add(r, pivot, -q)
    # bubble the pivot row up to position c; T sends row r to row r-1 (sign flips)
    for r in range(pivot, c, -1):
        red.apply(transposition_word(red.ring, red.n, r - 1))
    for r in range(c + 1, red.n):
        if not red.entry(r, c).is_zero():
            raise ContractError("Euclidean column reduction left a nonzero entry")


def _unit_pivot_column(red: _RowReducer, c: int) -> None:
    q: QuotRing = red.ring
    pivot = red.entry(c, c)
    if not pivot.is_unit():
        unit_row = next((r for r in range(c + 1, red.n) if red.entry(r, c).is_unit()), None)
        if unit_row is not None:
            t = (q.one - pivot) * red.entry(unit_row, c).inverse()
            red.add(c, unit_row, t)
        else:
            # deferred: the conditions package imports the lifting pipelines
            from ..conditions.usc import usc_witness

            g = q.modulus.generator
            tail = [red.entry(r, c).rep for r in range(c + 1, red.n)] + [g]
            witness = usc_witness(pivot.rep, tail, Ideal.of(g))
            for r, coefficient in zip(range(c + 1, red.n), witness.coefficients):
                red.add(c, r, coefficient)
            logger.debug("column %d: unit pivot built from a USC witness b=%s", c, witness.b)
        if not red.entry(c, c).is_unit():
            raise ContractError(f"could not create a unit pivot in column {c}")
    u_inv = red.entry(c, c).inverse()
    for r in range(c + 1, red.n):
        if not red.entry(r, c).is_zero():
            red.add(r, c, -(red.entry(r, c) * u_inv))


def _finish_triangular(red: _RowReducer) -> None:
    n = red.n
    for c in range(n - 1, -1, -1):
        u_inv = red.entry(c, c).inverse()
        for r in range(c):
            if not red.entry(r, c).is_zero():
                red.add(r, c, -(red.entry(r, c) * u_inv))
    one = coerce(red.ring, 1)
    for i in range(n - 1):
        d = red.entry(i, i)
        if d != one:
            red.apply(diag_word(red.ring, d.inverse(), n, i))
    if n and red.entry(n - 1, n - 1) != one:
        raise DeterminantError("diagonal did not reduce to the identity")


def elementary_decompose(matrix: RMatrix) -> ElemWord:
    """Return a word ``w`` with ``word_to_matrix(w) == matrix``.

    Parameters
    ----------
    matrix : RMatrix
        Square, determinant one, over ``Z``, ``F_p[x]`` or a finite quotient
        of either.

    Raises
    ------
    DeterminantError
        If ``det(matrix) != 1``.
    UnsupportedRingError
        For rings outside the supported family.
    """
    if not matrix.is_square:
        raise ContractError(f"cannot decompose a non-square {matrix.shape} matrix")
    ring = matrix.ring
    if det(matrix) != coerce(ring, 1):
        raise DeterminantError(f"determinant of {matrix} is not one")
    n = matrix.n_rows
    if isinstance(ring, QuotRing):
        if ring.is_zero_ring:
            return ElemWord(ring, n)
        if not ring.finite:
            return elementary_decompose(matrix.lift()).reduce(ring)
        red = _RowReducer(matrix)
        for c in range(n):
            _unit_pivot_column(red, c)
    else:
        red = _RowReducer(matrix)
        for c in range(n):
            _euclid_column(red, c)
    _finish_triangular(red)
    word = red.word()
    logger.debug("decomposed %dx%d matrix over %s into %d factors", n, n, ring, len(word))
    return word


def gl_decompose(matrix: RMatrix) -> Tuple[ElemWord, Entry]:
    """Factor an invertible matrix as ``diag(1, ..., 1, d) * word``.

    Returns
    -------
    (word, d)
        ``d = det(matrix)`` and ``word`` a decomposition of
        ``diag(1, ..., 1, d^-1) * matrix``.
    """
    if not matrix.is_square or matrix.n_rows == 0:
        raise ContractError("gl_decompose needs a nonempty square matrix")
    d = det(matrix)
    if not d.is_unit():
        raise UnsupportedRingError(f"determinant {d} is not a unit")
    rows = [list(r) for r in matrix.rows]
    d_inv = d.inverse()
    rows[-1] = [e * d_inv for e in rows[-1]]
    return elementary_decompose(RMatrix(matrix.ring, tuple(tuple(r) for r in rows))), d
