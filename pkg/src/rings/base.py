"""
base.py
=======

Exact arithmetic in the two supported Euclidean base rings:

* the integers ``Z`` (Python's arbitrary-precision ``int``), and
* univariate polynomials ``F_p[x]`` over a prime field.

Polynomials are stored as tuples of coefficients, lowest degree first, with
no trailing zero coefficients; the zero polynomial is the empty tuple.  The
heavy lifting for ``F_p[x]`` (division, extended gcd, factorisation) is
delegated to :mod:`sympy.polys.galoistools`, which works on dense lists with
the highest degree first, so the conversion happens at the boundary.

Everything here is immutable; all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Iterable, List, Sequence, Tuple, Union

from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_div,
    gf_factor,
    gf_gcdex,
    gf_monic,
    gf_mul,
    gf_neg,
    gf_sub,
)

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from ..errors import ContractError, MalformedInputError, NotUnitError, RingMismatchError

Coefficients = Tuple[int, ...]


class RingKind(str, Enum):
    """The two base rings the package computes in."""

    INTEGERS = "Z"
    POLY = "F_p[x]"


def _strip(coeffs: Iterable[int], p: int) -> Coefficients:
    out = [int(c) % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _to_gf(coeffs: Coefficients) -> List:
    return [ZZ(c) for c in reversed(coeffs)]


def _from_gf(dense: Sequence, p: int) -> Coefficients:
    return _strip(reversed([int(c) for c in dense]), p)


@dataclass(frozen=True)
class BaseRing:
    """A supported base ring.

    Attributes
    ----------
    kind : RingKind
        ``Z`` or ``F_p[x]``.
    characteristic : int
        The prime ``p`` for ``F_p[x]``; ``0`` for ``Z``.
    """

    kind: RingKind
    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.kind is RingKind.POLY:
            if not isprime(self.characteristic):
                raise ContractError(
                    f"F_p[x] needs a prime characteristic, got {self.characteristic}"
                )
        elif self.characteristic != 0:
            raise ContractError("the integers have characteristic 0")

    @classmethod
    def integers(cls) -> "BaseRing":
        return cls(RingKind.INTEGERS, 0)

    @classmethod
    def poly(cls, p: int) -> "BaseRing":
        return cls(RingKind.POLY, int(p))

    @property
    def is_integers(self) -> bool:
        return self.kind is RingKind.INTEGERS

    @property
    def zero(self) -> "RingElem":
        return RingElem(self, 0 if self.is_integers else ())

    @property
    def one(self) -> "RingElem":
        return RingElem(self, 1 if self.is_integers else (1,))

    def element(self, value: Union[int, Sequence[int], "RingElem"]) -> "RingElem":
        """Coerce an ``int``, a coefficient sequence or a :class:`RingElem`."""
        if isinstance(value, RingElem):
            if value.ring != self:
                raise RingMismatchError(f"{value} is not an element of {self}")
            return value
        if self.is_integers:
            if isinstance(value, bool) or not isinstance(value, int):
                try:
                    value = int(value)  # numpy integers, decimal strings
                except (TypeError, ValueError) as exc:
                    raise MalformedInputError(f"not an integer: {value!r}") from exc
            return RingElem(self, int(value))
        if isinstance(value, int):
            return RingElem(self, _strip((value,), self.characteristic))
        return RingElem(self, _strip(value, self.characteristic))

    def x(self) -> "RingElem":
        """The indeterminate of ``F_p[x]``."""
        if self.is_integers:
            raise ContractError("Z has no indeterminate")
        return RingElem(self, (0, 1))

    def to_dict(self) -> dict:
        if self.is_integers:
            return {"kind": "Z"}
        return {"kind": "F_p[x]", "p": self.characteristic}

    @classmethod
    def from_dict(cls, data: dict) -> "BaseRing":
        kind = data.get("kind")
        if kind == "Z":
            return cls.integers()
        if kind == "F_p[x]":
            return cls.poly(int(data["p"]))
        raise MalformedInputError(f"unknown ring kind {kind!r}")

    def __str__(self) -> str:
        return "Z" if self.is_integers else f"F_{self.characteristic}[x]"


@dataclass(frozen=True)
class RingElem:
    """An element of a :class:`BaseRing`.

    ``value`` is an ``int`` for ``Z`` and a stripped coefficient tuple
    (lowest degree first) for ``F_p[x]``.  Build elements with
    :meth:`BaseRing.element`, which normalises the representation.
    """

    ring: BaseRing
    value: Union[int, Coefficients]

    # ------------------------------------------------------------------
    # Predicates
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.value

    def is_unit(self) -> bool:
        """Units of ``Z`` are ``±1``; units of ``F_p[x]`` the nonzero constants."""
        if self.ring.is_integers:
            return self.value in (1, -1)
        return len(self.value) == 1

    @property
    def degree(self) -> int:
        """Polynomial degree; ``-1`` for the zero polynomial."""
        if self.ring.is_integers:
            raise ContractError("degree is defined for polynomials only")
        return len(self.value) - 1

    def size(self) -> int:
        """Euclidean size: ``|v|`` on ``Z``, degree on ``F_p[x]`` (zero gives -1)."""
        if self.ring.is_integers:
            return abs(self.value)
        return len(self.value) - 1

    def sort_key(self) -> int:
        """Total order used for canonical listings.

        Integers order by value; a polynomial orders by the integer
        ``sum c_i p^i``, i.e. by degree and then coefficients from the top.
        """
        if self.ring.is_integers:
            return self.value
        p = self.ring.characteristic
        key = 0
        for c in reversed(self.value):
            key = key * p + c
        return key

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other: Union["RingElem", int]) -> "RingElem":
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise RingMismatchError(f"cannot combine elements of {self.ring} and {other.ring}")
            return other
        return self.ring.element(other)

    def __add__(self, other: Union["RingElem", int]) -> "RingElem":
        other = self._coerce(other)
        if self.ring.is_integers:
            return RingElem(self.ring, self.value + other.value)
        p = self.ring.characteristic
        return RingElem(self.ring, _from_gf(gf_add(_to_gf(self.value), _to_gf(other.value), p, ZZ), p))

    __radd__ = __add__

    def __neg__(self) -> "RingElem":
        if self.ring.is_integers:
            return RingElem(self.ring, -self.value)
        p = self.ring.characteristic
        return RingElem(self.ring, _from_gf(gf_neg(_to_gf(self.value), p, ZZ), p))

    def __sub__(self, other: Union["RingElem", int]) -> "RingElem":
        other = self._coerce(other)
        if self.ring.is_integers:
            return RingElem(self.ring, self.value - other.value)
        p = self.ring.characteristic
        return RingElem(self.ring, _from_gf(gf_sub(_to_gf(self.value), _to_gf(other.value), p, ZZ), p))

    def __rsub__(self, other: Union["RingElem", int]) -> "RingElem":
        return self._coerce(other) - self

    def __mul__(self, other: Union["RingElem", int]) -> "RingElem":
        other = self._coerce(other)
        if self.ring.is_integers:
            return RingElem(self.ring, self.value * other.value)
        p = self.ring.characteristic
        return RingElem(self.ring, _from_gf(gf_mul(_to_gf(self.value), _to_gf(other.value), p, ZZ), p))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RingElem":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = self.ring.one, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: Union["RingElem", int]) -> Tuple["RingElem", "RingElem"]:
        """Euclidean division with ``size(remainder) < size(divisor)``."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.ring.is_integers:
            q, r = divmod(self.value, other.value)
            return RingElem(self.ring, q), RingElem(self.ring, r)
        p = self.ring.characteristic
        q, r = gf_div(_to_gf(self.value), _to_gf(other.value), p, ZZ)
        return RingElem(self.ring, _from_gf(q, p)), RingElem(self.ring, _from_gf(r, p))

    def __floordiv__(self, other: Union["RingElem", int]) -> "RingElem":
        return divmod(self, other)[0]

    def __mod__(self, other: Union["RingElem", int]) -> "RingElem":
        return divmod(self, other)[1]

    def divides(self, other: "RingElem") -> bool:
        """True iff ``self`` divides ``other``."""
        other = self._coerce(other)
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def exact_div(self, other: Union["RingElem", int]) -> "RingElem":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ContractError(f"{other} does not divide {self}")
        return q

    def inverse(self) -> "RingElem":
        if not self.is_unit():
            raise NotUnitError(f"{self} is not a unit of {self.ring}")
        if self.ring.is_integers:
            return self
        p = self.ring.characteristic
        return RingElem(self.ring, (pow(self.value[0], -1, p),))

    # ------------------------------------------------------------------
    # Normal forms and serialisation
    # ------------------------------------------------------------------

    def canonical(self) -> "RingElem":
        """The canonical associate: non-negative integer or monic polynomial."""
        if self.ring.is_integers:
            return RingElem(self.ring, abs(self.value))
        if self.is_zero():
            return self
        p = self.ring.characteristic
        _, monic = gf_monic(_to_gf(self.value), p, ZZ)
        return RingElem(self.ring, _from_gf(monic, p))

    def to_json(self) -> Union[str, List[int]]:
        """Decimal string for integers, coefficient list (lowest first) for polynomials."""
        if self.ring.is_integers:
            return str(self.value)
        return list(self.value)

    def __int__(self) -> int:
        if not self.ring.is_integers:
            raise ContractError("only integers convert to int")
        return self.value

    def __str__(self) -> str:
        if self.ring.is_integers:
            return str(self.value)
        if self.is_zero():
            return "0"
        terms = []
        for d in range(len(self.value) - 1, -1, -1):
            c = self.value[d]
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
            else:
                mono = "x" if d == 1 else f"x^{d}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)


# ----------------------------------------------------------------------
# Euclidean algorithm and friends
# ----------------------------------------------------------------------


def egcd(a: RingElem, b: RingElem) -> Tuple[RingElem, RingElem, RingElem]:
    """Extended gcd.

    Returns
    -------
    (g, x, y)
        ``g`` is the canonical gcd and ``a*x + b*y == g`` holds exactly.
        ``g`` is zero only when both inputs are zero, in which case
        ``x = y = 0``.
    """
    if a.ring != b.ring:
        raise RingMismatchError(f"egcd of elements of {a.ring} and {b.ring}")
    ring = a.ring
    if a.is_zero() and b.is_zero():
        return ring.zero, ring.zero, ring.zero
    if ring.is_integers:
        x, y, g = igcdex(a.value, b.value)
        return ring.element(int(g)), ring.element(int(x)), ring.element(int(y))
    p = ring.characteristic
    s, t, h = gf_gcdex(_to_gf(a.value), _to_gf(b.value), p, ZZ)
    return (
        RingElem(ring, _from_gf(h, p)),
        RingElem(ring, _from_gf(s, p)),
        RingElem(ring, _from_gf(t, p)),
    )


def gcd_all(elements: Sequence[RingElem]) -> RingElem:
    """Canonical gcd of a nonempty sequence."""
    if not elements:
        raise ContractError("gcd of an empty sequence")
    return reduce(lambda g, e: egcd(g, e)[0], elements[1:], elements[0].canonical())


def bezout_vector(elements: Sequence[RingElem]) -> Tuple[RingElem, List[RingElem]]:
    """Return ``(g, c)`` with ``sum(c_i * e_i) == g`` and ``g`` the canonical gcd."""
    if not elements:
        raise ContractError("Bezout vector of an empty sequence")
    ring = elements[0].ring
    g = ring.zero
    coeffs: List[RingElem] = []
    for e in elements:
        g, s, t = egcd(g, e)
        coeffs = [c * s for c in coeffs] + [t]
    return g, coeffs


def prime_factors(element: RingElem) -> List[RingElem]:
    """Distinct canonical prime factors of a nonzero element, in canonical order.

    Integers go through :func:`sympy.factorint`; polynomials through
    :func:`sympy.polys.galoistools.gf_factor` (monic irreducible factors).
    Units have no prime factors.
    """
    if element.is_zero():
        raise ContractError("the zero element has no finite factorisation")
    ring = element.ring
    if element.is_unit():
        return []
    if ring.is_integers:
        return [ring.element(p) for p in sorted(factorint(abs(element.value)))]
    p = ring.characteristic
    _, factors = gf_factor(_to_gf(element.value), p, ZZ)
    primes = {RingElem(ring, _from_gf(f, p)) for f, _ in factors}
    return sorted(primes, key=RingElem.sort_key)
