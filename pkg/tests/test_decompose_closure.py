"""
test_decompose_closure
======================

Tests for elementary decomposition, exhaustive group enumeration, random
group elements and the elementary closure search.
"""

import pytest

from src.errors import DeterminantError, GuardExceededError
from src.groups import (
    ClosureResult,
    RMatrix,
    det,
    elementary_decompose,
    enumerate_sl,
    enumerate_sp,
    ge_closure,
    gl_decompose,
    is_ge_ring,
    is_symplectic,
    random_sl,
    random_sl_stream,
    random_sp,
    random_sp_stream,
    word_to_matrix,
)
from src.rings import BaseRing, QuotRing

Z = BaseRing.integers()


@pytest.mark.parametrize(
    "rows",
    [
        [[2, 1], [1, 1]],
        [[0, -1], [1, 0]],
        [[-1, 0], [0, -1]],
        [[2, 3, 1], [5, 8, 3], [7, 11, 5]],
    ],
)
def test_decompose_over_integers(rows) -> None:
    m = RMatrix.from_values(Z, rows)
    assert det(m) == Z.one
    assert word_to_matrix(elementary_decompose(m)) == m


def test_decompose_random_integer_matrix() -> None:
    m = random_sl(Z, 4, seed=7)
    assert word_to_matrix(elementary_decompose(m)) == m


def test_decompose_over_polynomials() -> None:
    f5 = BaseRing.poly(5)
    x = f5.x()
    m = RMatrix.from_values(f5, [[x, 1], [x * x - 1, x]])
    word = elementary_decompose(m)
    assert word_to_matrix(word) == m


def test_decompose_every_element_of_sl2_mod_6() -> None:
    # columns such as (2, 3) hold no unit and need a unital-set witness
    q = QuotRing.integers_mod(6)
    for m in enumerate_sl(q, 2):
        assert word_to_matrix(elementary_decompose(m)) == m


@pytest.mark.parametrize("modulus", [2, 3, 4])
def test_decompose_round_trips_all_of_sl2(modulus) -> None:
    q = QuotRing.integers_mod(modulus)
    for m in enumerate_sl(q, 2):
        assert word_to_matrix(elementary_decompose(m)) == m


def test_decompose_round_trips_random_sl3_mod_5() -> None:
    q = QuotRing.integers_mod(5)
    for m in random_sl_stream(q, 3, seed=21, count=40):
        assert det(m) == q.one
        assert word_to_matrix(elementary_decompose(m)) == m


def test_decompose_edge_rings() -> None:
    zero_ring = QuotRing.integers_mod(1)
    assert len(elementary_decompose(RMatrix.identity(zero_ring, 3))) == 0

    infinite = QuotRing.integers_mod(0)
    m = RMatrix.from_values(infinite, [[2, 1], [1, 1]])
    assert word_to_matrix(elementary_decompose(m)) == m


def test_decompose_rejects_wrong_determinant() -> None:
    with pytest.raises(DeterminantError):
        elementary_decompose(RMatrix.from_values(Z, [[2, 0], [0, 1]]))


def test_gl_decompose_splits_off_the_determinant() -> None:
    q = QuotRing.integers_mod(5)
    m = RMatrix.from_values(q, [[2, 1], [1, 4]])
    word, d = gl_decompose(m)
    assert d == det(m) == q(2)
    rows = [list(r) for r in word_to_matrix(word).rows]
    rows[-1] = [e * d for e in rows[-1]]
    assert RMatrix(q, tuple(tuple(r) for r in rows)) == m


@pytest.mark.parametrize(
    "modulus, n, order",
    [(2, 2, 6), (3, 2, 24), (4, 2, 48), (2, 3, 168), (6, 2, 144), (10, 2, 720)],
)
def test_enumerate_sl_orders(modulus, n, order) -> None:
    group = enumerate_sl(QuotRing.integers_mod(modulus), n)
    assert len(group) == order
    assert group == sorted(group, key=RMatrix.sort_key)


def test_enumerate_sl_over_polynomial_quotient() -> None:
    q = QuotRing.of(BaseRing.poly(2), [0, 0, 1])  # F_2[x]/(x^2)
    assert len(enumerate_sl(q, 2)) == 48


@pytest.mark.parametrize("modulus, order", [(2, 6), (3, 24)])
def test_enumerate_sp2_matches_sl2(modulus, order) -> None:
    q = QuotRing.integers_mod(modulus)
    group = enumerate_sp(q, 1)
    assert len(group) == order
    assert all(is_symplectic(m) for m in group)


def test_enumeration_guards() -> None:
    with pytest.raises(GuardExceededError) as info:
        enumerate_sl(QuotRing.integers_mod(5), 3, guard=1000)
    assert info.value.guard == 1000
    with pytest.raises(GuardExceededError) as info:
        enumerate_sp(QuotRing.integers_mod(2), 2, guard=10)
    assert isinstance(info.value.partial, list)


def test_random_elements_are_seeded_group_elements() -> None:
    a = random_sl(Z, 3, seed=11)
    assert det(a) == Z.one
    assert random_sl(Z, 3, seed=11) == a
    s = random_sp(Z, 2, seed=3)
    assert is_symplectic(s)
    assert random_sp(Z, 2, seed=3) == s


def test_random_streams_continue_one_generator() -> None:
    stream = list(random_sl_stream(Z, 2, seed=11, count=4))
    assert len(stream) == 4
    assert stream[0] == random_sl(Z, 2, seed=11)
    assert all(det(m) == Z.one for m in stream)
    assert stream == list(random_sl_stream(Z, 2, seed=11, count=4))
    symplectic = list(random_sp_stream(Z, 2, seed=3, count=3))
    assert symplectic[0] == random_sp(Z, 2, seed=3)
    assert all(is_symplectic(m) for m in symplectic)


def test_closure_of_small_rings() -> None:
    closure = ge_closure(QuotRing.integers_mod(2), 2)
    assert closure.size == 6
    assert not closure.overflowed
    assert is_ge_ring(QuotRing.integers_mod(6), 2)
    assert is_ge_ring(QuotRing.of(BaseRing.poly(2), [0, 0, 1]), 2)


@pytest.mark.parametrize("modulus, order", [(2, 6), (3, 24), (4, 48)])
def test_closure_fills_sl2_of_local_rings(modulus, order) -> None:
    q = QuotRing.integers_mod(modulus)
    closure = ge_closure(q, 2)
    assert not closure.overflowed
    assert closure.size == order
    assert closure.sorted() == enumerate_sl(q, 2)


def test_closure_cap_reports_partial_result() -> None:
    capped = ge_closure(QuotRing.integers_mod(5), 2, cap=10)
    assert capped.overflowed
    assert capped.size == 10
    with pytest.raises(GuardExceededError) as info:
        ge_closure(QuotRing.integers_mod(5), 2, cap=10, strict=True)
    assert isinstance(info.value.partial, ClosureResult)
    assert info.value.partial.size == 10
