"""
test_rings
==========

Unit tests for exact arithmetic in ``Z`` and ``F_p[x]``, principal ideals,
quotient rings, the Chinese remainder theorem and finite product rings.
"""

import itertools
from math import gcd

import numpy as np
import pytest

from src.errors import (
    ContractError,
    InfiniteQuotientError,
    NotComaximalError,
    NotUnitError,
    RingMismatchError,
)
from src.rings import (
    BaseRing,
    Ideal,
    ProductRing,
    QuotRing,
    bezout_vector,
    crt_combine,
    egcd,
    gcd_all,
    is_comaximal,
    prime_factors,
    unit_group_exponent,
    unit_list,
)

Z = BaseRing.integers()
F5 = BaseRing.poly(5)


def test_egcd_satisfies_bezout_identity_over_integers() -> None:
    a, b = Z.element(240), Z.element(46)
    g, x, y = egcd(a, b)
    assert g == Z.element(2)
    assert a * x + b * y == g


def test_egcd_over_polynomials_returns_monic_gcd() -> None:
    x = F5.x()
    a = (x - 1) * (x + 2)
    b = (x - 1) * (x + 3)
    g, s, t = egcd(a, b)
    assert g == x - 1
    assert a * s + b * t == g


def test_egcd_bezout_identity_on_random_integer_pairs() -> None:
    rng = np.random.default_rng(0)
    for _ in range(1000):
        a = Z.element(int(rng.integers(-10**6, 10**6)))
        b = Z.element(int(rng.integers(-10**6, 10**6)))
        g, x, y = egcd(a, b)
        assert a * x + b * y == g
        assert int(g) == gcd(int(a), int(b))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_egcd_bezout_identity_on_random_polynomial_pairs(p) -> None:
    ring = BaseRing.poly(p)
    rng = np.random.default_rng(p)
    for _ in range(250):
        a = ring.element([int(c) for c in rng.integers(0, p, size=int(rng.integers(0, 7)))])
        b = ring.element([int(c) for c in rng.integers(0, p, size=int(rng.integers(0, 7)))])
        g, s, t = egcd(a, b)
        assert a * s + b * t == g
        if not g.is_zero():
            assert g.divides(a) and g.divides(b)


def test_gcd_all_and_bezout_vector() -> None:
    elems = [Z.element(6), Z.element(10), Z.element(15)]
    assert gcd_all(elems) == Z.one
    g, coeffs = bezout_vector(elems)
    assert g == Z.one
    total = Z.zero
    for c, e in zip(coeffs, elems):
        total = total + c * e
    assert total == g


def test_polynomial_division_and_inverse() -> None:
    x = F5.x()
    q, r = divmod(x * x + 1, x + 1)
    assert (x + 1) * q + r == x * x + 1
    assert r.degree < 1
    assert F5.element([2]).inverse() == F5.element([3])
    with pytest.raises(NotUnitError):
        x.inverse()


def test_prime_factors_are_sorted_and_distinct() -> None:
    assert prime_factors(Z.element(360)) == [Z.element(2), Z.element(3), Z.element(5)]
    # x^2 - 1 = (x + 1)(x + 4) over F_5
    assert prime_factors(F5.element([-1, 0, 1])) == [F5.element([1, 1]), F5.element([4, 1])]
    assert prime_factors(Z.element(-1)) == []


def test_ideal_generator_is_canonical() -> None:
    assert Ideal.principal(Z, -6).generator == Z.element(6)
    assert Ideal.principal(Z, -1).is_unit
    assert Ideal.principal(F5, [2, 2]).generator == F5.element([1, 1])
    assert Ideal.principal(Z, 0).is_zero
    assert Ideal.principal(Z, 4) * Ideal.principal(Z, 6) == Ideal.principal(Z, 24)
    assert Ideal.principal(Z, 4) + Ideal.principal(Z, 6) == Ideal.principal(Z, 2)


def test_comaximality() -> None:
    assert is_comaximal(Ideal.principal(Z, 2), Ideal.principal(Z, 3))
    assert not is_comaximal(Ideal.principal(Z, 4), Ideal.principal(Z, 6))
    x = F5.x()
    assert is_comaximal(Ideal.of(x), Ideal.of(x + 1))


def test_quotient_ring_of_integers() -> None:
    q = QuotRing.integers_mod(6)
    assert q.finite and q.size == 6
    assert [int(r) for r in q.elements()] == [0, 1, 2, 3, 4, 5]
    assert [int(u) for u in unit_list(q)] == [1, 5]
    assert q(-1) == q(5)
    assert QuotRing.integers_mod(7)(3).inverse() == QuotRing.integers_mod(7)(5)
    with pytest.raises(NotUnitError):
        q(2).inverse()


def test_quotient_of_polynomials_counts_units() -> None:
    q = QuotRing.of(F5, [0, 0, 1])  # F_5[x]/(x^2)
    assert q.size == 25
    assert len(list(q.elements())) == 25
    # units are exactly the classes with nonzero constant term
    assert len(unit_list(q)) == 20


def test_unit_group_exponent() -> None:
    assert unit_group_exponent(QuotRing.integers_mod(8)) == 2
    assert unit_group_exponent(QuotRing.integers_mod(7)) == 6
    assert unit_group_exponent(QuotRing.integers_mod(2)) == 1


def test_zero_ring_and_infinite_quotient() -> None:
    zero_ring = QuotRing.integers_mod(1)
    assert zero_ring.is_zero_ring
    assert zero_ring.size == 1
    assert zero_ring.one == zero_ring.zero
    assert zero_ring.one.is_unit()

    assert not zero_ring.finite
    assert [int(r) for r in zero_ring.elements()] == [0]
    assert not QuotRing.of(F5, 3).finite

    infinite = QuotRing.integers_mod(0)
    assert not infinite.finite
    assert infinite.size is None
    with pytest.raises(InfiniteQuotientError):
        list(infinite.elements())


def test_crt_combine_glues_residues() -> None:
    combined = crt_combine([QuotRing.integers_mod(4)(3), QuotRing.integers_mod(9)(7)])
    assert combined.parent == QuotRing.integers_mod(36)
    assert int(combined) % 4 == 3
    assert int(combined) % 9 == 7


def test_crt_combine_rejects_overlapping_moduli() -> None:
    with pytest.raises(NotComaximalError) as info:
        crt_combine([QuotRing.integers_mod(3)(1), QuotRing.integers_mod(5)(1), QuotRing.integers_mod(6)(1)])
    assert info.value.pair == (0, 2)
    assert info.value.to_dict()["pair"] == [0, 2]


def _phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def test_unit_counts_match_euler_phi() -> None:
    for n in range(2, 201):
        assert len(unit_list(QuotRing.integers_mod(n))) == _phi(n), n


def test_reduction_is_idempotent() -> None:
    rng = np.random.default_rng(1)
    for n in (2, 6, 9, 35, 120):
        q = QuotRing.integers_mod(n)
        for v in rng.integers(-1000, 1000, size=50):
            once = q.reduce_elem(Z.element(int(v)))
            assert q.reduce_elem(once) == once
            assert q(once) == q(int(v))
    q = QuotRing.of(F5, [1, 0, 1])  # F_5[x]/(x^2 + 1)
    for _ in range(50):
        e = F5.element([int(c) for c in rng.integers(0, 5, size=6)])
        once = q.reduce_elem(e)
        assert once.degree < 2
        assert q.reduce_elem(once) == once


def _coprime_triples():
    return [
        t for t in itertools.combinations((2, 3, 5, 7, 9), 3)
        if all(gcd(a, b) == 1 for a, b in itertools.combinations(t, 2))
    ]


@pytest.mark.parametrize("moduli", _coprime_triples())
def test_crt_combine_round_trips_every_residue_triple(moduli) -> None:
    rings = [QuotRing.integers_mod(m) for m in moduli]
    product = QuotRing.integers_mod(moduli[0] * moduli[1] * moduli[2])
    for values in itertools.product(*(range(m) for m in moduli)):
        combined = crt_combine([q(v) for q, v in zip(rings, values)])
        assert combined.parent == product
        assert tuple(int(combined) % m for m in moduli) == values


def test_residues_of_different_rings_do_not_mix() -> None:
    with pytest.raises(RingMismatchError):
        QuotRing.integers_mod(2)(1) + QuotRing.integers_mod(3)(1)


def test_product_ring_and_ideals() -> None:
    ring = ProductRing.of(QuotRing.integers_mod(2), QuotRing.integers_mod(3))
    assert ring.size == 6
    assert len(list(ring.elements())) == 6
    ideal = ring.ideal([2, 3])
    assert ideal.is_unit_modulo(ring(1, 2))
    assert not ideal.is_unit_modulo(ring(0, 1))
    with pytest.raises(ContractError):
        ring.ideal([2, 2])
