"""
test_conditions
===============

Tests for the unital set condition (constructive witnesses, refutations and
the exhaustive finite checker), the strong approximation checks and the
co-maximal congruence identities.
"""

from math import gcd

import pytest

from src.conditions import (
    factor_through,
    lemma41_check,
    sampled_membership,
    sap_check_small,
    sap_ge_converse_check,
    usc_check_finite,
    usc_refute_poly_example,
    usc_refute_zero_ideal,
    usc_witness,
    usc_witness_z,
)
from src.errors import ContractError, GuardExceededError, NotComaximalError, NotUnitalError
from src.groups import RMatrix, det, random_sl, random_sl_stream, random_sp_stream
from src.lifting import CongruenceLevel, GroupKind
from src.rings import BaseRing, Ideal, ProductRing, QuotRing

Z = BaseRing.integers()


# ----------------------------------------------------------------------
# USC witnesses and refutations
# ----------------------------------------------------------------------


def _is_unit_mod(value: int, n: int) -> bool:
    return gcd(value, n) == 1


def test_usc_witness_known_values() -> None:
    assert usc_witness_z([5, 7], 6) == 0
    assert usc_witness_z([2, 3], 4) == 3


@pytest.mark.parametrize("values, n", [([4, 7], 6), ([6, 10, 15], 30), ([0, 5, 12], 60), ([9, 4], 8)])
def test_usc_witness_makes_head_a_unit(values, n) -> None:
    witness = usc_witness(values[0], values[1:], Ideal.principal(Z, n))
    assert witness.recheck()
    assert _is_unit_mod(int(witness.b) + values[0], n)
    # b lies in the ideal generated by the tail
    tail_gcd = 0
    for t in values[1:]:
        tail_gcd = gcd(tail_gcd, t)
    assert int(witness.b) % tail_gcd == 0


def test_usc_witness_over_polynomials() -> None:
    f5 = BaseRing.poly(5)
    x = f5.x()
    ideal = Ideal.of(x * (x + 1))
    witness = usc_witness(x, [x + 1], ideal)
    assert witness.recheck()


def test_usc_witness_contracts() -> None:
    with pytest.raises(NotUnitalError):
        usc_witness_z([2, 4], 6)
    with pytest.raises(ContractError):
        usc_witness_z([5], 6)
    with pytest.raises(ContractError):
        usc_witness_z([5, 7], 0)


def test_zero_ideal_refutation() -> None:
    refutation = usc_refute_zero_ideal(5, [7])
    assert refutation.refuted
    assert refutation.modulus == 7
    assert refutation.to_json()["obstruction"]["head_residue"] == "5"

    holds = usc_refute_zero_ideal(3, [2])
    assert not holds.refuted
    assert 3 + holds.witness in (1, -1)
    assert holds.witness % 2 == 0


def test_polynomial_refutation_record() -> None:
    record = usc_refute_poly_example(2)
    assert record["unital"]
    assert record["candidates"] == 125
    assert record["all_non_units"]
    assert record["units_found"] == []
    assert record["min_degree"] == 1
    assert record["symbolic"]["verified_on_candidates"]
    with pytest.raises(GuardExceededError):
        usc_refute_poly_example(6, guard=1000)


def test_usc_holds_on_finite_rings() -> None:
    report = usc_check_finite(QuotRing.integers_mod(6), [0], max_set_size=3)
    assert report.verdict
    assert report.counterexample is None
    assert report.sets_checked > 0
    assert report.recheck()

    product = ProductRing.of(QuotRing.integers_mod(2), QuotRing.integers_mod(3))
    split = usc_check_finite(product, [2, 1], max_set_size=2)
    assert split.verdict
    assert split.to_json()["bounds"]["max_set_size"] == 2


def test_usc_check_guard_and_contracts() -> None:
    with pytest.raises(GuardExceededError):
        usc_check_finite(QuotRing.integers_mod(12), [0], max_set_size=3, guard=100)
    with pytest.raises(ContractError):
        usc_check_finite(QuotRing.integers_mod(6), [0], max_set_size=1)


def test_usc_check_is_independent_of_worker_count() -> None:
    q = QuotRing.integers_mod(4)
    serial = usc_check_finite(q, [2], max_set_size=2, n_jobs=1)
    parallel = usc_check_finite(q, [2], max_set_size=2, n_jobs=2)
    assert serial.witnesses == parallel.witnesses
    assert serial.sets_checked == parallel.sets_checked


# ----------------------------------------------------------------------
# Strong approximation
# ----------------------------------------------------------------------


@pytest.mark.parametrize("kind, k, n, total", [("sl", 1, 4, 48), ("sl", 1, 6, 144), ("sl", 2, 2, 168), ("sp", 1, 3, 24)])
def test_sap_check_small_covers_whole_group(kind, k, n, total) -> None:
    report = sap_check_small(kind, k, n)
    assert report.total == total
    assert report.verdict
    assert report.to_json()["coverage"] == f"{total}/{total}"


def test_sap_ge_converse_check() -> None:
    report = sap_ge_converse_check(6, 2)
    assert report.total == 144
    assert report.verdict


def test_sap_check_guard() -> None:
    with pytest.raises(GuardExceededError):
        sap_check_small("sl", 2, 5, guard=1000)


# ----------------------------------------------------------------------
# Co-maximal congruence identities
# ----------------------------------------------------------------------


def test_factor_through_splits_an_integral_matrix() -> None:
    b = random_sl(Z, 2, seed=4)
    first, second = Ideal.principal(Z, 4), Ideal.principal(Z, 9)
    y, g = factor_through(b, first, second, GroupKind.SL)
    assert y @ g == b
    assert det(y) == Z.one
    assert CongruenceLevel(first, GroupKind.SL, 1).contains(y)
    assert CongruenceLevel(second, GroupKind.SL, 1).contains(g)


def test_lemma41_check_sl_and_sp() -> None:
    report = lemma41_check(2, 3, kind="sl", k=1, samples=5, seed=0)
    assert report.orders == {"first": 6, "second": 24, "product": 144}
    assert report.order_identity
    assert report.verdict

    symplectic = lemma41_check(2, 3, kind="sp", k=1, samples=3, seed=1)
    assert symplectic.verdict


def test_lemma41_check_rejects_overlapping_ideals() -> None:
    with pytest.raises(NotComaximalError):
        lemma41_check(4, 6, samples=1, seed=0)


def test_sampled_membership_agrees() -> None:
    counts = sampled_membership(2, 3, samples=20, seed=2)
    assert counts["agree"] == counts["samples"] == 80
    # the words with entries divisible by 6 are always members
    assert counts["in_product_level"] >= 20
    assert counts["in_product_level"] < counts["samples"]


def test_scaled_streams_stay_in_the_congruence_subgroup() -> None:
    sl_level = CongruenceLevel(Ideal.principal(Z, 6), GroupKind.SL, 2)
    assert all(sl_level.contains(m) for m in random_sl_stream(Z, 3, seed=1, count=10, scale=6))
    sp_level = CongruenceLevel(Ideal.principal(Z, 6), GroupKind.SP, 2)
    assert all(sp_level.contains(m) for m in random_sp_stream(Z, 2, seed=1, count=10, scale=6))
    identity = RMatrix.identity(Z, 2)
    assert CongruenceLevel(Ideal.principal(Z, 6), GroupKind.SL, 1).contains(identity)
