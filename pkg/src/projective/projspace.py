"""
projspace.py
============

Weighted generalised projective spaces over a quotient ``R/I``.

A point is a unital tuple ``(a_0, ..., a_k)`` up to the weighted scaling
``a_i ~ λ^{m_i} a_i`` by units ``λ`` of ``R/I``.  When ``I`` is the unit
ideal the whole space collapses to a single distinguished point.

Class representatives are the lexicographic minimum (by canonical residue
order) of the scaling orbit, lifted to a tuple that is unital over ``R``
itself.  Weights only matter modulo the exponent of the unit group, and are
reduced that way before any orbit is computed.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from ..config import current_settings
from ..errors import ContractError, GuardExceededError, MalformedInputError, NotUnitalError
from ..lifting.completion import lift_unital_residue
from ..rings import BaseRing, Ideal, QuotRing, Residue, RingElem, gcd_all, unit_group_exponent, unit_list

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightVector:
    """Positive weights ``(m_0, ..., m_k)``."""

    weights: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.weights:
            raise ContractError("weight vectors are nonempty")
        if any(int(m) < 1 for m in self.weights):
            raise ContractError(f"weights must be positive, got {self.weights}")

    @classmethod
    def of(cls, weights: Iterable[int]) -> "WeightVector":
        return cls(tuple(int(m) for m in weights))

    @classmethod
    def ones(cls, length: int) -> "WeightVector":
        return cls((1,) * length)

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        try:
            return cls.of(int(part) for part in text.split(","))
        except ValueError as exc:
            raise MalformedInputError(f"cannot parse weights {text!r}") from exc

    def __len__(self) -> int:
        return len(self.weights)

    def reduced(self, exponent: int) -> Tuple[int, ...]:
        """Weights modulo the unit-group exponent, ``0`` mapped to the exponent."""
        return tuple((m % exponent) or exponent for m in self.weights)


@dataclass(frozen=True)
class ProjPoint:
    """A class in the weighted projective space over ``R / ideal``.

    ``rep`` is unital over the base ring.  Over the unit ideal every tuple
    is in the single class and ``rep`` is empty.
    """

    ideal: Ideal
    weights: WeightVector
    rep: Tuple[RingElem, ...]

    @property
    def is_singleton(self) -> bool:
        return self.ideal.is_unit

    def residues(self) -> Tuple[Residue, ...]:
        q = self.ideal.quotient()
        return tuple(q(e) for e in self.rep)

    def to_json(self) -> dict:
        if self.is_singleton:
            return {"singleton": True}
        return {
            "ideal": self.ideal.generator.to_json(),
            "weights": list(self.weights.weights),
            "rep": [e.to_json() for e in self.rep],
        }

    def __str__(self) -> str:
        if self.is_singleton:
            return "[*]"
        return "[" + " : ".join(str(e) for e in self.rep) + "]"


def is_unital_tuple(values: Sequence[Any]) -> bool:
    """True iff the entries generate the unit ideal of their ring (plain ints are read in Z)."""
    if not values:
        raise ContractError("unitality is defined for nonempty tuples")
    ring = values[0].ring if isinstance(values[0], RingElem) else BaseRing.integers()
    return gcd_all([ring.element(v) for v in values]).is_unit()


def _finite_quotient(ideal: Ideal) -> QuotRing:
    q = ideal.quotient()
    q.require_finite()
    return q


def _residue_tuple(q: QuotRing, values: Sequence[Any]) -> Tuple[Residue, ...]:
    residues = tuple(q(v) for v in values)
    reps = [r.rep for r in residues] + [q.modulus.generator]
    if not gcd_all(reps).is_unit():
        raise NotUnitalError(f"{[str(r) for r in residues]} is not unital modulo {q.modulus}")
    return residues


def _scaled(values: Sequence[Residue], unit: Residue, weights: Sequence[int]) -> Tuple[Residue, ...]:
    return tuple(unit ** m * v for v, m in zip(values, weights))


def _orbit_key(values: Sequence[Residue]) -> Tuple[int, ...]:
    return tuple(v.sort_key() for v in values)


class _Orbits:
    """Units and reduced weights of one ``(ideal, weights)`` pair."""

    def __init__(self, ideal: Ideal, weights: WeightVector) -> None:
        self.q = _finite_quotient(ideal)
        self.units = unit_list(self.q)
        self.weights = weights.reduced(unit_group_exponent(self.q))

    def orbit(self, values: Sequence[Residue]) -> List[Tuple[Residue, ...]]:
        return [_scaled(values, u, self.weights) for u in self.units]

    def minimum(self, values: Sequence[Residue]) -> Tuple[Residue, ...]:
        return min(self.orbit(values), key=_orbit_key)


def _check_length(values: Sequence[Any], weights: WeightVector) -> None:
    if len(values) != len(weights):
        raise ContractError(f"tuple of length {len(values)} against {len(weights)} weights")


def proj_equiv(a: Sequence[Any], b: Sequence[Any], ideal: Ideal, weights: WeightVector) -> bool:
    """True iff ``a_i ≡ λ^{m_i} b_i (mod I)`` for some unit ``λ`` of ``R/I``.

    Raises
    ------
    InfiniteQuotientError
        For a proper ideal with infinite quotient.
    NotUnitalError
        If either tuple is not unital modulo ``I``.
    """
    if ideal.is_unit:
        return True
    _check_length(a, weights)
    _check_length(b, weights)
    orbits = _Orbits(ideal, weights)
    left = _residue_tuple(orbits.q, a)
    right = _residue_tuple(orbits.q, b)
    return any(left == scaled for scaled in orbits.orbit(right))


def _point(ideal: Ideal, weights: WeightVector, residues: Sequence[Residue]) -> ProjPoint:
    return ProjPoint(ideal, weights, lift_unital_residue(list(residues)))


def make_point(values: Sequence[Any], ideal: Ideal, weights: WeightVector) -> ProjPoint:
    """A (not necessarily canonical) point from a tuple unital modulo ``ideal``."""
    if ideal.is_unit:
        return ProjPoint(ideal, weights, ())
    _check_length(values, weights)
    q = _finite_quotient(ideal)
    return _point(ideal, weights, _residue_tuple(q, values))


def canon(point: ProjPoint) -> ProjPoint:
    """The canonical representative of the class of ``point``."""
    if point.is_singleton:
        return ProjPoint(point.ideal, point.weights, ())
    orbits = _Orbits(point.ideal, point.weights)
    minimum = orbits.minimum(_residue_tuple(orbits.q, point.rep))
    return _point(point.ideal, point.weights, minimum)


def enumerate_pf(k: int, weights: WeightVector, ideal: Ideal, guard: Optional[int] = None) -> List[ProjPoint]:
    """One canonical point per class of the ``k``-dimensional space over ``R/I``.

    Points come out in ascending order of their canonical residue tuples.

    Raises
    ------
    ContractError
        If ``I`` is not proper or the weights do not have ``k + 1`` entries.
    GuardExceededError
        If ``|R/I|^(k+1)`` exceeds ``guard``.
    """
    if not ideal.is_proper:
        raise ContractError(f"enumeration needs a proper ideal, got {ideal}")
    if len(weights) != k + 1:
        raise ContractError(f"{len(weights)} weights for a space of dimension {k}")
    orbits = _Orbits(ideal, weights)
    q = orbits.q
    guard = current_settings().pf_tuples if guard is None else guard
    total = q.size ** (k + 1)
    if total > guard:
        raise GuardExceededError(f"{total} tuples over {q} exceed the guard {guard}", guard=guard)
    g = q.modulus.generator
    minima = {}
    for values in itertools.product(list(q.elements()), repeat=k + 1):
        if not gcd_all([v.rep for v in values] + [g]).is_unit():
            continue
        minimum = orbits.minimum(values)
        minima[_orbit_key(minimum)] = minimum
    points = [_point(ideal, weights, minima[key]) for key in sorted(minima)]
    logger.debug("PF^%d over %s with weights %s: %d classes", k, q, weights.weights, len(points))
    return points


def pf_count(k: int, weights: WeightVector, ideal: Ideal) -> int:
    """Number of classes; ``1`` for the unit ideal."""
    if ideal.is_unit:
        return 1
    return len(enumerate_pf(k, weights, ideal))


def integer_ideal(n: int) -> Ideal:
    return Ideal.principal(BaseRing.integers(), n)
