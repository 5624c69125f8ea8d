"""
test_projspace
==============

Tests for weighted generalised projective spaces: equivalence, canonical
representatives, enumeration counts, weight reduction and the guard.
"""

import itertools
from math import gcd

import numpy as np
import pytest

from src.errors import ContractError, GuardExceededError, MalformedInputError, NotUnitalError
from src.projective import (
    WeightVector,
    canon,
    enumerate_pf,
    integer_ideal,
    is_unital_tuple,
    make_point,
    pf_count,
    proj_equiv,
)
from src.rings import BaseRing, Ideal, QuotRing, unit_group_exponent


@pytest.mark.parametrize(
    "modulus, weights, count",
    [
        (2, (1, 1), 3),
        (3, (1, 1), 4),
        (5, (1, 1), 6),
        (5, (1, 2), 7),
        (7, (1, 1), 8),
    ],
)
def test_enumerate_pf_counts(modulus, weights, count) -> None:
    points = enumerate_pf(1, WeightVector.of(weights), integer_ideal(modulus))
    assert len(points) == count
    assert pf_count(1, WeightVector.of(weights), integer_ideal(modulus)) == count


def test_enumerate_pf_over_composite_modulus() -> None:
    # P^1(Z/4) has 6 points: 4 with a unit first coordinate, 2 with first coordinate even
    assert len(enumerate_pf(1, WeightVector.ones(2), integer_ideal(4))) == 6
    # P^2(F_2) has 7 points
    assert len(enumerate_pf(2, WeightVector.ones(3), integer_ideal(2))) == 7


def test_enumerated_points_are_canonical_and_unital() -> None:
    weights = WeightVector.of((1, 2))
    ideal = integer_ideal(5)
    for point in enumerate_pf(1, weights, ideal):
        assert is_unital_tuple(point.rep)
        assert canon(point) == point


def test_proj_equiv_uses_weighted_scaling() -> None:
    ideal = integer_ideal(5)
    # 2 * (1, 1) = (2, 2) but 2^(1, 2) * (1, 1) = (2, 4)
    assert proj_equiv((2, 2), (1, 1), ideal, WeightVector.of((1, 1)))
    assert not proj_equiv((2, 2), (1, 1), ideal, WeightVector.of((1, 2)))
    assert proj_equiv((2, 4), (1, 1), ideal, WeightVector.of((1, 2)))


def test_proj_equiv_over_the_unit_ideal_is_trivial() -> None:
    assert proj_equiv((3, 5), (7, 2), integer_ideal(1), WeightVector.ones(2))


def test_canon_picks_one_representative_per_class() -> None:
    ideal = integer_ideal(7)
    weights = WeightVector.ones(2)
    a = canon(make_point((3, 6), ideal, weights))
    b = canon(make_point((1, 2), ideal, weights))
    assert a == b
    assert proj_equiv(a.rep, (3, 6), ideal, weights)


def test_singleton_space_over_unit_ideal() -> None:
    point = make_point((4, 6), integer_ideal(1), WeightVector.ones(2))
    assert point.is_singleton
    assert point.to_json() == {"singleton": True}
    assert pf_count(1, WeightVector.ones(2), integer_ideal(1)) == 1


def test_non_unital_tuples_are_rejected() -> None:
    with pytest.raises(NotUnitalError):
        make_point((2, 4), integer_ideal(6), WeightVector.ones(2))
    assert not is_unital_tuple((4, 6))
    assert is_unital_tuple((4, 7))


def test_polynomial_quotient_space() -> None:
    f3 = BaseRing.poly(3)
    ideal = Ideal.of(f3.x())
    # F_3[x]/(x) is F_3, so the projective line has 4 points
    assert len(enumerate_pf(1, WeightVector.ones(2), ideal)) == 4


def test_weight_vector_parsing_and_validation() -> None:
    assert WeightVector.parse("1,2").weights == (1, 2)
    assert WeightVector.of((5, 2)).reduced(4) == (1, 2)
    assert WeightVector.of((4,)).reduced(4) == (4,)
    with pytest.raises(MalformedInputError):
        WeightVector.parse("1,a")
    with pytest.raises(ContractError):
        WeightVector.of((0, 1))


def test_enumeration_contracts_and_guard() -> None:
    with pytest.raises(ContractError):
        enumerate_pf(1, WeightVector.ones(3), integer_ideal(5))
    with pytest.raises(ContractError):
        enumerate_pf(1, WeightVector.ones(2), integer_ideal(1))
    with pytest.raises(GuardExceededError):
        enumerate_pf(2, WeightVector.ones(3), integer_ideal(11), guard=100)


def _unital_tuples(n, length):
    return [t for t in itertools.product(range(n), repeat=length) if gcd(gcd(*t), n) == 1]


def _scaled_equal(a, b, n, weights) -> bool:
    units = [u for u in range(1, n) if gcd(u, n) == 1]
    return any(all((x - pow(u, m, n) * y) % n == 0 for x, y, m in zip(a, b, weights)) for u in units)


@pytest.mark.parametrize(
    "modulus, weights",
    [(5, (1, 2)), (7, (1, 1)), (9, (1, 3)), (8, (2, 1, 1))],
)
def test_proj_equiv_is_an_equivalence_relation(modulus, weights) -> None:
    ideal = integer_ideal(modulus)
    w = WeightVector.of(weights)
    pool = _unital_tuples(modulus, len(weights))
    rng = np.random.default_rng(modulus)
    for _ in range(100):
        a, b, c = (pool[int(i)] for i in rng.integers(0, len(pool), size=3))
        assert proj_equiv(a, a, ideal, w)
        assert proj_equiv(a, b, ideal, w) == proj_equiv(b, a, ideal, w)
        if proj_equiv(a, b, ideal, w) and proj_equiv(b, c, ideal, w):
            assert proj_equiv(a, c, ideal, w)


@pytest.mark.parametrize("modulus, weights", [(5, (1, 2)), (4, (1, 1)), (6, (2, 1))])
def test_canon_agrees_with_proj_equiv(modulus, weights) -> None:
    ideal = integer_ideal(modulus)
    w = WeightVector.of(weights)
    tuples = _unital_tuples(modulus, 2)
    canonical = {t: canon(make_point(t, ideal, w)) for t in tuples}
    for a, b in itertools.product(tuples, repeat=2):
        equivalent = proj_equiv(a, b, ideal, w)
        assert (canonical[a] == canonical[b]) == equivalent
        assert equivalent == _scaled_equal(a, b, modulus, weights)


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("k", [1, 2])
def test_class_count_of_projective_space_over_a_prime_field(p, k) -> None:
    expected = (p ** (k + 1) - 1) // (p - 1)
    assert len(enumerate_pf(k, WeightVector.ones(k + 1), integer_ideal(p))) == expected


@pytest.mark.parametrize("modulus, weights", [(7, (1, 8)), (9, (7, 3)), (8, (4, 5))])
def test_weight_reduction_keeps_every_equivalence(modulus, weights) -> None:
    ideal = integer_ideal(modulus)
    exponent = unit_group_exponent(QuotRing.integers_mod(modulus))
    full = WeightVector.of(weights)
    reduced = WeightVector.of(full.reduced(exponent))
    tuples = _unital_tuples(modulus, 2)
    rng = np.random.default_rng(modulus)
    for i, j in rng.integers(0, len(tuples), size=(300, 2)):
        a, b = tuples[int(i)], tuples[int(j)]
        answer = _scaled_equal(a, b, modulus, weights)
        assert proj_equiv(a, b, ideal, full) == answer
        assert proj_equiv(a, b, ideal, reduced) == answer
