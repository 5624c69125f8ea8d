"""Exact ring arithmetic subpackage.

This subpackage contains the two supported Euclidean base rings (``Z`` and
``F_p[x]``), their principal ideals and quotient rings, the Chinese
remainder theorem, and finite products of quotient rings.
"""

from .base import BaseRing, RingElem, RingKind, bezout_vector, egcd, gcd_all, prime_factors  # noqa: F401
from .quotient import (  # noqa: F401
    Ideal,
    QuotRing,
    Residue,
    crt_combine,
    is_comaximal,
    is_unit,
    unit_group_exponent,
    unit_list,
)
from .product import ProductElem, ProductIdeal, ProductRing  # noqa: F401
