"""
sap.py
======

Strong approximation lifts: preimages over the base ring of group elements
modulo ``n``.

``sap_lift_sl`` factors the matrix into elementary matrices modulo ``n``,
replaces each entry by its canonical representative and multiplies over the
base ring.

``sap_lift_sp`` peels one hyperbolic pair at a time.  The first row is lifted
to a unimodular row and completed to ``P`` (symplectic over the base ring);
``M = A P^-1`` then has first row ``e_0`` and ``k``-th column ``e_k``.  With
``r = (x; y)`` the ``k``-th row of ``M`` (so ``y_0 = 1``) the integral
symplectic matrices

    T_A = [[Id, 0], [S, Id]]      S_0b = S_b0 = -x_b (b >= 1),
                                  S_00 = -x_0 + sum_{a>=1} y_a x_a
    T_B = diag(U, U^-T)           U = Id + sum_{a>=1} y_a e_a0

send ``M`` to the block embedding of an element of ``Sp_2(k-1)``, which is
lifted recursively.
"""

from __future__ import annotations

import logging
from typing import List

from ..errors import ContractError, DeterminantError, NotSymplecticError
from ..groups import RMatrix, det, elementary_decompose, is_symplectic, symplectic_inverse, word_to_matrix
from ..rings import BaseRing, QuotRing
from .completion import complete_row_sp, lift_unital_residue

logger = logging.getLogger(__name__)


def _require_quotient(matrix: RMatrix) -> QuotRing:
    if not isinstance(matrix.ring, QuotRing):
        raise ContractError(f"lifting needs a matrix over a quotient ring, got {matrix.ring}")
    return matrix.ring


def sap_lift_sl(matrix: RMatrix) -> RMatrix:
    """Determinant-one ``B`` over the base ring with ``B mod n == matrix``.

    Raises
    ------
    DeterminantError
        If ``det(matrix) != 1`` modulo ``n``.
    """
    q = _require_quotient(matrix)
    if not matrix.is_square:
        raise ContractError(f"cannot lift a non-square {matrix.shape} matrix")
    if det(matrix) != q.one:
        raise DeterminantError(f"{matrix} does not have determinant one modulo {q.modulus}")
    if q.is_zero_ring:
        return RMatrix.identity(q.base, matrix.n_rows)
    if not q.finite:
        return matrix.lift()
    word = elementary_decompose(matrix).lift()
    lifted = word_to_matrix(word)
    logger.debug("SL lift over %s from a word of %d factors", q, len(word))
    return lifted


def _embed(inner: RMatrix, ring: BaseRing) -> RMatrix:
    """Put ``inner`` (size ``2(k-1)``) on the coordinates other than ``0`` and ``k``."""
    k = inner.n_rows // 2 + 1
    index = [a + 1 if a < k - 1 else a + 2 for a in range(2 * (k - 1))]
    rows = [list(r) for r in RMatrix.identity(ring, 2 * k).rows]
    for a, ia in enumerate(index):
        for b, ib in enumerate(index):
            rows[ia][ib] = inner[a, b]
    return RMatrix(ring, tuple(tuple(r) for r in rows))


def _extract(matrix: RMatrix, k: int) -> RMatrix:
    index = [a + 1 if a < k - 1 else a + 2 for a in range(2 * (k - 1))]
    return RMatrix(matrix.ring, tuple(tuple(matrix[ia, ib] for ib in index) for ia in index))


def _peeling_transform(reduced: RMatrix, ring: BaseRing, k: int) -> RMatrix:
    """Integral ``T = T_A T_B`` built from the ``k``-th row of ``reduced``."""
    x = [reduced[k, b].rep for b in range(k)]
    y = [reduced[k, k + b].rep for b in range(k)]
    zero, one = ring.zero, ring.one
    s = [[zero] * k for _ in range(k)]
    corner = -x[0]
    for b in range(1, k):
        s[0][b] = s[b][0] = -x[b]
        corner = corner + y[b] * x[b]
    s[0][0] = corner

    size = 2 * k
    t_a: List[List] = [list(r) for r in RMatrix.identity(ring, size).rows]
    for a in range(k):
        for b in range(k):
            t_a[k + a][b] = s[a][b]
    t_b: List[List] = [list(r) for r in RMatrix.identity(ring, size).rows]
    for a in range(1, k):
        t_b[a][0] = y[a]
        # U^-T = Id - sum y_a e_0a
        t_b[k][k + a] = -y[a]
    return RMatrix(ring, tuple(tuple(r) for r in t_a)) @ RMatrix(ring, tuple(tuple(r) for r in t_b))


def _lift_sp(matrix: RMatrix) -> RMatrix:
    q: QuotRing = matrix.ring
    ring = q.base
    k = matrix.n_rows // 2
    v = lift_unital_residue(list(matrix.row(0)))
    completion = complete_row_sp(v, 0, ring)
    reduced = matrix @ symplectic_inverse(completion).reduce(q)
    transform = _peeling_transform(reduced, ring, k)
    core = reduced @ transform.reduce(q)
    if k == 1:
        if not core.is_identity():
            raise ContractError("symplectic peeling left a nontrivial 2x2 core")
        inner_lift = RMatrix.identity(ring, 2)
    else:
        inner_lift = _embed(_lift_sp(_extract(core, k)), ring)
    return inner_lift @ symplectic_inverse(transform) @ completion


def sap_lift_sp(matrix: RMatrix) -> RMatrix:
    """Symplectic ``B`` over the base ring with ``B mod n == matrix``.

    Raises
    ------
    NotSymplecticError
        If ``matrix`` does not preserve the standard form modulo ``n``.
    """
    q = _require_quotient(matrix)
    if not matrix.is_square or matrix.n_rows % 2:
        raise NotSymplecticError(f"symplectic matrices are 2k x 2k, got {matrix.shape}")
    if not is_symplectic(matrix):
        raise NotSymplecticError(f"{matrix} is not symplectic modulo {q.modulus}")
    if q.is_zero_ring:
        return RMatrix.identity(q.base, matrix.n_rows)
    if not q.finite:
        return matrix.lift()
    lifted = _lift_sp(matrix)
    if lifted.reduce(q) != matrix:
        raise ContractError("symplectic lift does not reduce to its input")
    logger.debug("Sp lift over %s of a %dx%d matrix", q, matrix.n_rows, matrix.n_rows)
    return lifted
