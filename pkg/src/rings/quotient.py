"""
quotient.py
===========

Principal ideals of the base rings and the quotient rings ``R/<g>``.

An :class:`Ideal` stores its generator in canonical form (non-negative for
``Z``, monic for nonzero polynomials, ``1`` for the unit ideal), which makes
ideal equality a representation equality.  A :class:`QuotRing` is finite
exactly when the generator is an integer of absolute value at least two or
a polynomial of positive degree; ``<0>`` quotients are allowed and behave as
the base ring itself, while operations that need finiteness reject them.

:class:`Residue` values always hold the canonical representative:
``0 <= rep < n`` over ``Z`` and ``deg(rep) < deg(g)`` over ``F_p[x]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from math import lcm
from typing import Iterator, List, Optional, Sequence, Union

from ..errors import ContractError, InfiniteQuotientError, NotComaximalError, NotUnitError, RingMismatchError
from .base import BaseRing, RingElem, egcd

ElemLike = Union[RingElem, int, Sequence[int]]


@dataclass(frozen=True)
class Ideal:
    """A principal ideal ``<generator>`` of a base ring."""

    ring: BaseRing
    generator: RingElem

    @classmethod
    def principal(cls, ring: BaseRing, value: ElemLike) -> "Ideal":
        """Build ``<value>`` with the generator put into canonical form."""
        g = ring.element(value)
        if g.is_unit():
            return cls(ring, ring.one)
        return cls(ring, g.canonical())

    @classmethod
    def of(cls, element: RingElem) -> "Ideal":
        return cls.principal(element.ring, element)

    @property
    def is_zero(self) -> bool:
        return self.generator.is_zero()

    @property
    def is_unit(self) -> bool:
        """True for the whole ring ``R``."""
        return self.generator.is_unit()

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def contains(self, element: ElemLike) -> bool:
        return self.generator.divides(self.ring.element(element))

    def __mul__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatchError("product of ideals of different rings")
        return Ideal.of(self.generator * other.generator)

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatchError("sum of ideals of different rings")
        return Ideal.of(egcd(self.generator, other.generator)[0])

    def quotient(self) -> "QuotRing":
        return QuotRing(self)

    def to_json(self) -> dict:
        return {"ring": self.ring.to_dict(), "generator": self.generator.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "Ideal":
        ring = BaseRing.from_dict(data["ring"])
        return cls.principal(ring, data["generator"])

    def __str__(self) -> str:
        return f"<{self.generator}>"


def is_comaximal(first: Ideal, second: Ideal) -> bool:
    """True iff ``first + second`` is the unit ideal."""
    if first.ring != second.ring:
        raise RingMismatchError("co-maximality of ideals of different rings")
    return egcd(first.generator, second.generator)[0].is_unit()


@dataclass(frozen=True)
class QuotRing:
    """The quotient ring ``R / modulus``."""

    modulus: Ideal

    @classmethod
    def of(cls, ring: BaseRing, generator: ElemLike) -> "QuotRing":
        return cls(Ideal.principal(ring, generator))

    @classmethod
    def integers_mod(cls, n: int) -> "QuotRing":
        return cls.of(BaseRing.integers(), n)

    @property
    def base(self) -> BaseRing:
        return self.modulus.ring

    @property
    def finite(self) -> bool:
        """True for a proper ideal of finite index.

        The unit ideal gives the zero ring, which is not counted as finite
        here even though it has one element; see :attr:`size`.
        """
        if self.is_zero_ring:
            return False
        g = self.modulus.generator
        if self.base.is_integers:
            return g.value != 0
        return not g.is_zero()

    @property
    def size(self) -> Optional[int]:
        """Cardinality, or ``None`` for an infinite quotient (the zero ring has size 1)."""
        if self.is_zero_ring:
            return 1
        if not self.finite:
            return None
        g = self.modulus.generator
        if self.base.is_integers:
            return g.value
        return self.base.characteristic ** g.degree

    @property
    def is_zero_ring(self) -> bool:
        return self.modulus.is_unit

    def require_finite(self) -> None:
        if self.size is None:
            raise InfiniteQuotientError(f"{self} is infinite")

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------

    def reduce_elem(self, element: RingElem) -> RingElem:
        """Canonical representative of ``element`` modulo the ideal."""
        g = self.modulus.generator
        if g.is_zero():
            return element
        if self.is_zero_ring:
            return self.base.zero
        return element % g

    def __call__(self, value: ElemLike) -> "Residue":
        if isinstance(value, Residue):
            if value.parent != self:
                raise RingMismatchError(f"{value} does not live in {self}")
            return value
        return Residue(self, self.reduce_elem(self.base.element(value)))

    @property
    def zero(self) -> "Residue":
        return Residue(self, self.base.zero)

    @property
    def one(self) -> "Residue":
        return self(1)

    def elements(self) -> Iterator["Residue"]:
        """All elements in ascending canonical order (finite quotients only)."""
        self.require_finite()
        size = self.size
        if self.base.is_integers:
            for v in range(size):
                yield Residue(self, RingElem(self.base, v))
            return
        p = self.base.characteristic
        d = self.modulus.generator.degree
        for digits in itertools.product(range(p), repeat=d):
            # product() varies the last digit fastest, so read it as the constant term
            yield Residue(self, self.base.element(tuple(reversed(digits))))

    def to_dict(self) -> dict:
        return {"base": self.base.to_dict(), "modulus": self.modulus.generator.to_json()}

    def __str__(self) -> str:
        if self.modulus.is_zero:
            return str(self.base)
        if self.base.is_integers:
            return f"Z/{self.modulus.generator}"
        return f"{self.base}/({self.modulus.generator})"


@dataclass(frozen=True)
class Residue:
    """A residue class holding its canonical representative."""

    parent: QuotRing
    rep: RingElem

    def _coerce(self, other: Union["Residue", ElemLike]) -> "Residue":
        if isinstance(other, Residue):
            if other.parent != self.parent:
                raise RingMismatchError(f"cannot combine residues of {self.parent} and {other.parent}")
            return other
        return self.parent(other)

    def __add__(self, other: Union["Residue", ElemLike]) -> "Residue":
        other = self._coerce(other)
        return Residue(self.parent, self.parent.reduce_elem(self.rep + other.rep))

    __radd__ = __add__

    def __sub__(self, other: Union["Residue", ElemLike]) -> "Residue":
        other = self._coerce(other)
        return Residue(self.parent, self.parent.reduce_elem(self.rep - other.rep))

    def __rsub__(self, other: Union["Residue", ElemLike]) -> "Residue":
        return self._coerce(other) - self

    def __neg__(self) -> "Residue":
        return Residue(self.parent, self.parent.reduce_elem(-self.rep))

    def __mul__(self, other: Union["Residue", ElemLike]) -> "Residue":
        other = self._coerce(other)
        return Residue(self.parent, self.parent.reduce_elem(self.rep * other.rep))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Residue":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = self.parent.one, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def is_unit(self) -> bool:
        return is_unit(self)

    def inverse(self) -> "Residue":
        g = self.parent.modulus.generator
        if self.parent.is_zero_ring:
            return self
        if g.is_zero():
            return Residue(self.parent, self.rep.inverse())
        d, x, _ = egcd(self.rep, g)
        if not d.is_unit():
            raise NotUnitError(f"{self} is not a unit of {self.parent}")
        return Residue(self.parent, self.parent.reduce_elem(x * d.inverse()))

    def lift(self) -> RingElem:
        """The canonical representative as a base-ring element."""
        return self.rep

    def sort_key(self) -> int:
        return self.rep.sort_key()

    def to_json(self):
        return self.rep.to_json()

    def __int__(self) -> int:
        return int(self.rep)

    def __str__(self) -> str:
        return str(self.rep)


def is_unit(residue: Residue) -> bool:
    """True iff ``residue`` is invertible in its quotient ring.

    Over ``<0>`` this is the unit test of the base ring (``±1`` in ``Z``,
    nonzero constants in ``F_p[x]``); the zero ring's single element is a unit.
    """
    q = residue.parent
    if q.is_zero_ring:
        return True
    g = q.modulus.generator
    if g.is_zero():
        return residue.rep.is_unit()
    return egcd(residue.rep, g)[0].is_unit()


def unit_list(q: QuotRing) -> List[Residue]:
    """The units of a finite quotient ring in ascending canonical order."""
    q.require_finite()
    return [r for r in q.elements() if is_unit(r)]


def unit_group_exponent(q: QuotRing) -> int:
    """Exponent of the unit group: the lcm of the multiplicative orders."""
    exponent = 1
    for u in unit_list(q):
        order, power = 1, u
        while power != q.one:
            power = power * u
            order += 1
        exponent = lcm(exponent, order)
    return exponent


def crt_combine(residues: Sequence[Residue]) -> Residue:
    """Chinese remainder combination of residues with co-maximal moduli.

    Returns the residue modulo the product ideal that reduces to every input.

    Raises
    ------
    NotComaximalError
        When two moduli are not co-maximal; ``pair`` names their positions.
    """
    if not residues:
        raise ContractError("crt_combine needs at least one residue")
    ring = residues[0].parent.base
    for r in residues:
        if r.parent.base != ring:
            raise RingMismatchError("crt_combine over different base rings")
    for i, j in itertools.combinations(range(len(residues)), 2):
        if not is_comaximal(residues[i].parent.modulus, residues[j].parent.modulus):
            raise NotComaximalError(
                f"moduli {residues[i].parent.modulus} and {residues[j].parent.modulus} "
                f"(positions {i}, {j}) are not co-maximal",
                pair=(i, j),
            )

    def fold(acc: Residue, nxt: Residue) -> Residue:
        m = acc.parent.modulus.generator
        n = nxt.parent.modulus.generator
        _, s, _ = egcd(m, n)
        target = QuotRing(Ideal.of(m * n))
        # s*m == 1 modulo n and == 0 modulo m
        value = acc.rep + (nxt.rep - acc.rep) * s * m
        return target(value)

    return reduce(fold, residues[1:], residues[0])
