"""
test_matrix_words
=================

Tests for exact matrices (determinants, inverses, reduction, the symplectic
form) and for elementary words, including the closed forms of the
transposition ``T`` and the diagonal ``D(s)``.
"""

import pytest

from src.errors import ContractError, NotUnitError
from src.groups import (
    ElemFactor,
    ElemWord,
    RMatrix,
    apply_word,
    det,
    diag_word,
    inverse,
    is_symplectic,
    omega,
    symplectic_elementary,
    symplectic_inverse,
    transposition_word,
    word_to_matrix,
)
from src.rings import BaseRing, QuotRing

Z = BaseRing.integers()
F5 = BaseRing.poly(5)


def test_small_determinant_and_inverse() -> None:
    m = RMatrix.from_values(Z, [[2, 1], [1, 1]])
    assert det(m) == Z.one
    assert inverse(m) == RMatrix.from_values(Z, [[1, -1], [-1, 2]])
    assert (m @ inverse(m)).is_identity()


def test_large_determinant_uses_fraction_free_elimination() -> None:
    rows = [[1 if i == j else 0 for j in range(5)] for i in range(5)]
    rows[0], rows[1] = rows[1], rows[0]
    rows[2][4] = 7
    rows[4][0] = 3
    m = RMatrix.from_values(Z, rows)
    # a row swap of a unipotent matrix
    assert det(m) == Z.element(-1)
    reference = RMatrix.from_values(Z, [[0, 1, 0, 0, 0], [1, 0, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    assert det(reference) == Z.element(-1)


def test_determinant_over_quotient_and_polynomials() -> None:
    q = QuotRing.integers_mod(6)
    assert det(RMatrix.from_values(q, [[5, 0], [0, 5]])) == q.one
    x = F5.x()
    m = RMatrix.from_values(F5, [[x, 1], [x * x - 1, x]])
    assert det(m) == F5.one
    assert (inverse(m) @ m).is_identity()


def test_inverse_requires_unit_determinant() -> None:
    with pytest.raises(NotUnitError):
        inverse(RMatrix.from_values(Z, [[2, 0], [0, 1]]))


def test_reduce_maps_entries_to_canonical_residues() -> None:
    m = RMatrix.from_values(Z, [[7, -3], [2, 1]])
    q = QuotRing.integers_mod(5)
    assert m.reduce(q).to_int_rows() == ((2, 2), (2, 1))
    assert m.reduce(q).lift() == RMatrix.from_values(Z, [[2, 2], [2, 1]])


def test_transposition_word_closed_form() -> None:
    assert word_to_matrix(transposition_word(Z)) == RMatrix.from_values(Z, [[0, -1], [1, 0]])


def test_transposition_squares_to_minus_identity() -> None:
    t = word_to_matrix(transposition_word(Z))
    assert t @ t == -RMatrix.identity(Z, 2)
    embedded = word_to_matrix(transposition_word(Z, n=3, first=1))
    assert det(embedded) == Z.one
    assert embedded @ embedded == RMatrix.from_values(Z, [[1, 0, 0], [0, -1, 0], [0, 0, -1]])


def test_diag_word_closed_form() -> None:
    q = QuotRing.integers_mod(7)
    assert word_to_matrix(diag_word(q, 3)) == RMatrix.from_values(q, [[3, 0], [0, 5]])
    assert word_to_matrix(diag_word(Z, -1, n=3, first=1)) == RMatrix.from_values(
        Z, [[1, 0, 0], [0, -1, 0], [0, 0, -1]]
    )
    with pytest.raises(NotUnitError):
        diag_word(q.base, 2)


def test_word_inverse_and_apply() -> None:
    word = ElemWord.build(Z, 3, [(0, 1, 2), (2, 0, -3), (1, 2, 5)])
    assert word_to_matrix(word + word.inverse()).is_identity()
    m = RMatrix.from_values(Z, [[1, 2, 3], [0, 1, 4], [5, 6, 0]])
    assert apply_word(word, m) == word_to_matrix(word) @ m
    assert ElemWord.from_json(word.to_json()) == word


def test_word_reduce_commutes_with_product() -> None:
    word = ElemWord.build(Z, 2, [(0, 1, 7), (1, 0, -4)])
    q = QuotRing.integers_mod(3)
    assert word_to_matrix(word.reduce(q)) == word_to_matrix(word).reduce(q)


def test_factor_rejects_diagonal_position() -> None:
    with pytest.raises(ContractError):
        ElemFactor(1, 1, Z.one)
    with pytest.raises(ContractError):
        ElemWord.build(Z, 2, [(0, 2, 1)])


def test_symplectic_generators_preserve_the_form() -> None:
    k = 2
    gens = [
        symplectic_elementary(Z, k, "X", 0, 3, 1),
        symplectic_elementary(Z, k, "Y", 1, -2),
        symplectic_elementary(Z, k, "Z", 0, 5),
    ]
    product = RMatrix.identity(Z, 2 * k)
    for g in gens:
        assert is_symplectic(g)
        product = product @ g
    assert is_symplectic(product)
    assert (symplectic_inverse(product) @ product).is_identity()
    assert is_symplectic(omega(Z, k))


def test_non_symplectic_inputs() -> None:
    # det 2, so M^T Omega M = 2 Omega
    assert not is_symplectic(RMatrix.from_values(Z, [[2, 0], [0, 1]]))
    assert is_symplectic(RMatrix.from_values(Z, [[0, 1], [-1, 0]]))
    assert not is_symplectic(RMatrix.from_values(Z, [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))
    with pytest.raises(ContractError):
        is_symplectic(RMatrix.identity(Z, 3))
    with pytest.raises(ContractError):
        symplectic_elementary(Z, 2, "X", 1, 1, 1)
