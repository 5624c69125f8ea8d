"""
usc.py
======

The unital set condition (USC).

An ideal ``I`` of ``R`` satisfies the USC when every unital set
``{a_1, ..., a_k}`` admits some ``b`` in the ideal generated by
``a_2, ..., a_k`` such that ``a_1 + b`` is a unit modulo ``I``.

* Nonzero proper ideals of ``Z`` and ``F_p[x]`` always satisfy it, and
  :func:`usc_witness` builds ``b`` prime by prime from the factorisation of
  the modulus.
* The zero ideal of ``Z`` does not; :func:`usc_refute_zero_ideal` produces
  the modular obstruction for a given set.
* Finite rings (and finite products of them) are decided by exhaustion in
  :func:`usc_check_finite`.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass, field
from functools import partial
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..config import current_settings
from ..errors import ContractError, GuardExceededError, NotUnitalError
from ..evaluation.metrics import run_stats
from ..parallel import ordered_map
from ..rings import (
    BaseRing,
    Ideal,
    ProductElem,
    ProductIdeal,
    ProductRing,
    QuotRing,
    RingElem,
    crt_combine,
    egcd,
    gcd_all,
    prime_factors,
)

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# Constructive witnesses over Z and F_p[x]
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class UscWitness:
    """``b = sum(c_j * tail_j)`` with ``head + b`` a unit modulo ``ideal``."""

    head: RingElem
    tail: Tuple[RingElem, ...]
    ideal: Ideal
    coefficients: Tuple[RingElem, ...]
    b: RingElem

    def recheck(self) -> bool:
        combined = self.head.ring.zero
        for c, t in zip(self.coefficients, self.tail):
            combined = combined + c * t
        if combined != self.b:
            return False
        return egcd(self.head + self.b, self.ideal.generator)[0].is_unit()

    def to_json(self) -> dict:
        return {
            "head": self.head.to_json(),
            "tail": [t.to_json() for t in self.tail],
            "ideal": self.ideal.to_json(),
            "coefficients": [c.to_json() for c in self.coefficients],
            "b": self.b.to_json(),
        }


def usc_witness(head: Any, tail: Sequence[Any], ideal: Ideal) -> UscWitness:
    """Build ``b`` in ``<tail>`` making ``head + b`` a unit modulo ``ideal``.

    For each prime ``P`` of the modulus: if ``P`` does not divide ``head`` the
    coefficients vanish modulo ``P``; otherwise the first tail element not
    divisible by ``P`` gets coefficient ``1`` modulo ``P``.  The per-prime
    choices are glued with the Chinese remainder theorem.

    Raises
    ------
    ContractError
        If the tail is empty or the ideal is zero or the unit ideal.
    NotUnitalError
        If ``{head} + tail`` does not generate the unit ideal.
    """
    ring: BaseRing = ideal.ring
    head = ring.element(head)
    tail = tuple(ring.element(t) for t in tail)
    if not tail:
        raise ContractError("a unital set for the USC needs at least two elements")
    g = ideal.generator
    if g.is_zero() or g.is_unit():
        raise ContractError(f"USC witnesses need a nonzero proper ideal, got {ideal}")
    if not gcd_all([head, *tail]).is_unit():
        raise NotUnitalError(f"set {[str(head)] + [str(t) for t in tail]} is not unital")

    residues: List[List] = [[] for _ in tail]
    for prime in prime_factors(g):
        local = QuotRing(Ideal.of(prime))
        chosen: Optional[int] = None
        if prime.divides(head):
            chosen = next(j for j, t in enumerate(tail) if not prime.divides(t))
        for j in range(len(tail)):
            residues[j].append(local(1 if j == chosen else 0))
    coefficients = tuple(crt_combine(r).rep for r in residues)
    b = ring.zero
    for c, t in zip(coefficients, tail):
        b = b + c * t
    return UscWitness(head, tail, ideal, coefficients, b)


def usc_witness_z(values: Sequence[int], n: int) -> int:
    """Integer front end: ``b`` for the set ``values`` (head first) modulo ``n``."""
    if len(values) < 2:
        raise ContractError("a unital set for the USC needs at least two elements")
    if n in (0, 1, -1):
        raise ContractError(f"modulus {n} is not a nonzero proper ideal of Z")
    witness = usc_witness(values[0], values[1:], Ideal.principal(BaseRing.integers(), n))
    return int(witness.b)


# ----------------------------------------------------------------------
# Refutations
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroIdealRefutation:
    """Checked record for the zero ideal of ``Z``.

    ``b`` ranges over multiples of ``d = gcd(tail)``; ``head + b`` can only be
    ``±1`` when ``head ≡ ±1 (mod d)``.
    """

    head: int
    tail: Tuple[int, ...]
    modulus: int
    refuted: bool
    witness: Optional[int] = None

    def to_json(self) -> dict:
        payload = {
            "head": str(self.head),
            "tail": [str(t) for t in self.tail],
            "refuted": self.refuted,
            "obstruction": {
                "modulus": str(self.modulus),
                "head_residue": str(self.head % self.modulus) if self.modulus else str(self.head),
                "unit_residues": sorted({str(1 % self.modulus), str(-1 % self.modulus)}) if self.modulus else ["-1", "1"],
            },
        }
        if self.witness is not None:
            payload["witness"] = str(self.witness)
        return payload


def usc_refute_zero_ideal(head: int, tail: Sequence[int]) -> ZeroIdealRefutation:
    """Decide whether ``{head} + tail`` fails the USC for the zero ideal of ``Z``."""
    ring = BaseRing.integers()
    tail = tuple(int(t) for t in tail)
    if not tail:
        raise ContractError("a unital set for the USC needs at least two elements")
    if not gcd_all([ring.element(head)] + [ring.element(t) for t in tail]).is_unit():
        raise NotUnitalError(f"set {[head, *tail]} is not unital")
    d = int(gcd_all([ring.element(t) for t in tail]))
    for target in (1, -1):
        gap = target - head
        if (d == 0 and gap == 0) or (d != 0 and gap % d == 0):
            return ZeroIdealRefutation(head, tail, d, refuted=False, witness=gap)
    return ZeroIdealRefutation(head, tail, d, refuted=True)


def usc_refute_poly_example(degree_bound: int, guard: Optional[int] = None) -> dict:
    """``x + t(3x^2 - 1)`` is never a unit of ``F_5[x]``.

    Checks every ``t`` of degree at most ``degree_bound`` and records the
    leading-coefficient argument: ``t != 0`` gives degree ``deg t + 2`` as
    ``3 lc(t) != 0 (mod 5)``; ``t = 0`` leaves ``x``.
    """
    if degree_bound < 0:
        raise ContractError("degree bound must be non-negative")
    guard = current_settings().usc_candidates if guard is None else guard
    ring = BaseRing.poly(5)
    head = ring.x()
    generator = ring.element([-1, 0, 3])
    candidates = 5 ** (degree_bound + 1)
    if candidates > guard:
        raise GuardExceededError(f"{candidates} polynomials exceed the guard {guard}", guard=guard)
    started = time.perf_counter()
    units = []
    formula_holds = True
    min_degree = None
    for coeffs in itertools.product(range(5), repeat=degree_bound + 1):
        t = ring.element(coeffs)
        value = head + t * generator
        if value.is_unit():
            units.append(t.to_json())
        expected = 1 if t.is_zero() else t.degree + 2
        formula_holds = formula_holds and value.degree == expected
        min_degree = value.degree if min_degree is None else min(min_degree, value.degree)
    return {
        "ring": str(ring),
        "head": str(head),
        "generator": str(generator),
        "unital": gcd_all([head, generator]).is_unit(),
        "degree_bound": degree_bound,
        "candidates": candidates,
        "all_non_units": not units,
        "units_found": units,
        "min_degree": min_degree,
        "symbolic": {
            "t_zero": "x + 0 = x has degree 1",
            "t_nonzero": "deg(x + t(3x^2 - 1)) = deg t + 2 because 3*lc(t) != 0 mod 5",
            "verified_on_candidates": formula_holds,
        },
        "stats": run_stats(candidates, started),
    }


# ----------------------------------------------------------------------
# Exhaustive check on finite rings
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class UscEntry:
    head: ProductElem
    tail: Tuple[ProductElem, ...]
    b: Optional[ProductElem] = None

    def to_json(self) -> dict:
        payload: Dict[str, Any] = {"set": [self.head.to_json()] + [t.to_json() for t in self.tail]}
        if self.b is not None:
            payload["b"] = self.b.to_json()
        return payload


@dataclass(frozen=True)
class UscReport:
    """Result of :func:`usc_check_finite`.

    On success every set scanned has a stored witness; on failure
    ``counterexample`` holds the first set (in scan order) without one.
    """

    ring: ProductRing
    ideal: ProductIdeal
    verdict: bool
    max_set_size: int
    sets_checked: int
    witnesses: Tuple[UscEntry, ...] = ()
    counterexample: Optional[UscEntry] = None
    stats: Dict[str, float] = field(default_factory=dict)

    def recheck(self) -> bool:
        """Re-verify every stored witness from scratch."""
        for entry in self.witnesses:
            if entry.b is None:
                return False
            if not _in_generated_ideal(self.ring, entry.tail, entry.b):
                return False
            if not self.ideal.is_unit_modulo(entry.head + entry.b):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "ideal": str(self.ideal),
            "verdict": self.verdict,
            "bounds": {"max_set_size": self.max_set_size, "sets_checked": self.sets_checked},
            "witnesses": [w.to_json() for w in self.witnesses],
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
            "stats": self.stats,
        }


def _tail_divisors(ring: ProductRing, tail: Sequence[ProductElem]) -> List[RingElem]:
    # the ideal <tail> of R/<g_i> is <d_i>/<g_i> with d_i = gcd(tail_i, g_i)
    return [
        gcd_all([t.parts[i].rep for t in tail] + [q.modulus.generator])
        for i, q in enumerate(ring.factors)
    ]


def _in_generated_ideal(ring: ProductRing, tail: Sequence[ProductElem], b: ProductElem) -> bool:
    return all(d.divides(b.parts[i].rep) for i, d in enumerate(_tail_divisors(ring, tail)))


def _is_unital(ring: ProductRing, elements: Sequence[ProductElem]) -> bool:
    return all(
        gcd_all([e.parts[i].rep for e in elements] + [q.modulus.generator]).is_unit()
        for i, q in enumerate(ring.factors)
    )


def _ideal_members(ring: ProductRing, tail: Sequence[ProductElem]) -> List[ProductElem]:
    per_factor = []
    for q, d in zip(ring.factors, _tail_divisors(ring, tail)):
        per_factor.append([r for r in q.elements() if d.divides(r.rep)])
    return [ProductElem(ring, tuple(parts)) for parts in itertools.product(*per_factor)]


def _scan_head(head: ProductElem, ring: ProductRing, ideal: ProductIdeal, max_set_size: int) -> Tuple[List[UscEntry], Optional[UscEntry], int]:
    elements = list(ring.elements())
    found: List[UscEntry] = []
    checked = 0
    for size in range(2, max_set_size + 1):
        for tail in itertools.combinations_with_replacement(elements, size - 1):
            if not _is_unital(ring, (head,) + tail):
                continue
            checked += 1
            b = next((c for c in _ideal_members(ring, tail) if ideal.is_unit_modulo(head + c)), None)
            entry = UscEntry(head, tuple(tail), b)
            if b is None:
                return found, entry, checked
            found.append(entry)
    return found, None, checked


def _as_product(ring: Union[QuotRing, ProductRing]) -> ProductRing:
    return ProductRing.of(ring) if isinstance(ring, QuotRing) else ring


def usc_check_finite(
    ring: Union[QuotRing, ProductRing],
    ideal_generators: Sequence[Any],
    max_set_size: Optional[int] = None,
    guard: Optional[int] = None,
    n_jobs: Optional[int] = None,
) -> UscReport:
    """Exhaustively decide the USC for an ideal of a finite (product) ring.

    Parameters
    ----------
    ring : QuotRing or ProductRing
        The finite ring under test.
    ideal_generators : sequence
        One base-ring generator ``h_i`` per factor, dividing the factor's
        modulus; ``0`` stands for the zero ideal of that factor.
    max_set_size : int, optional
        Largest unital set scanned (``K``); defaults to ``usc.max_set_size``.
    guard : int, optional
        Cap on (set, candidate ``b``) pairs; defaults to ``guards.usc_candidates``.
    """
    settings = current_settings()
    product = _as_product(ring)
    max_set_size = settings.usc_max_set_size if max_set_size is None else max_set_size
    guard = settings.usc_candidates if guard is None else guard
    if max_set_size < 2:
        raise ContractError("the USC concerns sets of at least two elements")
    generators = [
        q.modulus.generator if q.base.element(h).is_zero() else h
        for q, h in zip(product.factors, ideal_generators)
    ]
    ideal = product.ideal(generators)
    size = product.size
    work = sum(size * comb(size + s - 2, s - 1) for s in range(2, max_set_size + 1)) * size
    if work > guard:
        raise GuardExceededError(f"USC scan of {product} needs up to {work} checks (guard {guard})", guard=guard)

    started = time.perf_counter()
    heads = list(product.elements())
    scans = ordered_map(partial(_scan_head, ring=product, ideal=ideal, max_set_size=max_set_size), heads, n_jobs)
    witnesses: List[UscEntry] = []
    checked = 0
    counterexample = None
    for found, failure, count in scans:
        witnesses.extend(found)
        checked += count
        if failure is not None and counterexample is None:
            counterexample = failure
    verdict = counterexample is None
    logger.info("USC on %s modulo %s: %s after %d sets", product, ideal, verdict, checked)
    return UscReport(
        ring=product,
        ideal=ideal,
        verdict=verdict,
        max_set_size=max_set_size,
        sets_checked=checked,
        witnesses=tuple(witnesses) if verdict else (),
        counterexample=counterexample,
        stats=run_stats(checked, started),
    )
