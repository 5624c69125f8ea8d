"""
product.py
==========

Finite direct products ``R/<g_1> x ... x R/<g_r>`` with componentwise
arithmetic.  They exist so the unital set condition can be exercised on
finite products of quotient rings; a single quotient ring is the product
with one factor.

Ideals of a finite product are products of ideals of the factors, and an
ideal of ``R/<g>`` is ``<h>/<g>`` for a divisor ``h`` of ``g``.  A
:class:`ProductIdeal` therefore stores one base-ring ideal ``<h_i>`` per
factor with ``<g_i> ⊆ <h_i>``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from ..errors import ContractError, RingMismatchError
from .base import egcd
from .quotient import Ideal, QuotRing, Residue


@dataclass(frozen=True)
class ProductRing:
    """A finite product of finite quotient rings."""

    factors: Tuple[QuotRing, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ContractError("a product ring needs at least one factor")
        for q in self.factors:
            q.require_finite()

    @classmethod
    def of(cls, *factors: QuotRing) -> "ProductRing":
        return cls(tuple(factors))

    @property
    def size(self) -> int:
        size = 1
        for q in self.factors:
            size *= q.size
        return size

    def elements(self) -> Iterator["ProductElem"]:
        for parts in itertools.product(*(list(q.elements()) for q in self.factors)):
            yield ProductElem(self, tuple(parts))

    def __call__(self, *parts) -> "ProductElem":
        if len(parts) != len(self.factors):
            raise ContractError(f"expected {len(self.factors)} components, got {len(parts)}")
        return ProductElem(self, tuple(q(v) for q, v in zip(self.factors, parts)))

    def zero_ideal(self) -> "ProductIdeal":
        return ProductIdeal(self, tuple(q.modulus for q in self.factors))

    def ideal(self, generators: Sequence) -> "ProductIdeal":
        """The ideal ``prod <h_i>/<g_i>``; each ``h_i`` must divide ``g_i``."""
        if len(generators) != len(self.factors):
            raise ContractError("one ideal generator per factor is required")
        ideals = []
        for q, h in zip(self.factors, generators):
            ideal = h if isinstance(h, Ideal) else Ideal.principal(q.base, h)
            if not ideal.contains(q.modulus.generator):
                raise ContractError(f"{ideal} does not contain the modulus {q.modulus} of {q}")
            ideals.append(ideal)
        return ProductIdeal(self, tuple(ideals))

    def __str__(self) -> str:
        return " x ".join(str(q) for q in self.factors)


@dataclass(frozen=True)
class ProductElem:
    """An element of a :class:`ProductRing`."""

    parent: ProductRing
    parts: Tuple[Residue, ...]

    def _check(self, other: "ProductElem") -> None:
        if other.parent != self.parent:
            raise RingMismatchError("elements of different product rings")

    def __add__(self, other: "ProductElem") -> "ProductElem":
        self._check(other)
        return ProductElem(self.parent, tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __mul__(self, other: "ProductElem") -> "ProductElem":
        self._check(other)
        return ProductElem(self.parent, tuple(a * b for a, b in zip(self.parts, other.parts)))

    def is_unit(self) -> bool:
        return all(p.is_unit() for p in self.parts)

    def sort_key(self) -> Tuple[int, ...]:
        return tuple(p.sort_key() for p in self.parts)

    def to_json(self):
        if len(self.parts) == 1:
            return self.parts[0].to_json()
        return [p.to_json() for p in self.parts]

    def __str__(self) -> str:
        if len(self.parts) == 1:
            return str(self.parts[0])
        return "(" + ", ".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class ProductIdeal:
    """An ideal of a product ring, one base ideal ``<h_i> ⊇ <g_i>`` per factor."""

    parent: ProductRing
    components: Tuple[Ideal, ...]

    def is_unit_modulo(self, element: ProductElem, index: Optional[int] = None) -> bool:
        """True iff ``element`` is a unit modulo this ideal.

        With ``index`` only that component is tested.
        """
        indices = range(len(self.components)) if index is None else (index,)
        return all(
            egcd(element.parts[i].rep, self.components[i].generator)[0].is_unit()
            for i in indices
        )

    def to_json(self):
        gens = [c.generator.to_json() for c in self.components]
        return gens[0] if len(gens) == 1 else gens

    def __str__(self) -> str:
        return " x ".join(f"{c}/{q.modulus}" for c, q in zip(self.components, self.parent.factors))
