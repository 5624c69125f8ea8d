"""
errors.py
=========

Exception hierarchy shared by every subpackage.  Each class carries a
machine-readable ``code`` which the command-line front end copies into its
JSON error document, so scripts can branch on the failure kind without
parsing messages.

Contract violations derive from :class:`ValueError` as well, which keeps
plain ``except ValueError`` handlers working for library callers.
"""

from __future__ import annotations

from typing import Any, Optional, Tuple


class CongruenceLiftError(Exception):
    """Base class for all errors raised by the package."""

    code: str = "error"

    def to_dict(self) -> dict:
        return {"code": self.code, "message": str(self)}


class MalformedInputError(CongruenceLiftError, ValueError):
    """Input could not be parsed (bad JSON, bad flag syntax, bad field)."""

    code = "malformed_input"


class GuardExceededError(CongruenceLiftError):
    """An exhaustive computation would exceed its cardinality guard.

    Parameters
    ----------
    message : str
        Human readable description.
    guard : int
        The cap that was exceeded.
    partial : Any, optional
        Whatever was computed before the guard tripped.
    """

    code = "guard_exceeded"

    def __init__(self, message: str, guard: int, partial: Any = None) -> None:
        super().__init__(message)
        self.guard = guard
        self.partial = partial


class ContractError(CongruenceLiftError, ValueError):
    """A precondition of an operation does not hold."""

    code = "contract_violation"


class RingMismatchError(ContractError):
    """Operands live in different rings."""


class NotComaximalError(ContractError):
    """Two ideals that must be co-maximal are not.

    The offending pair of positions is kept in ``pair``.
    """

    def __init__(self, message: str, pair: Optional[Tuple[int, int]] = None) -> None:
        super().__init__(message)
        self.pair = pair

    def to_dict(self) -> dict:
        payload = super().to_dict()
        if self.pair is not None:
            payload["pair"] = list(self.pair)
        return payload


class NotUnitalError(ContractError):
    """A tuple or set does not generate the unit ideal."""


class NotUnitError(ContractError):
    """An element expected to be invertible is not."""


class DeterminantError(ContractError):
    """A matrix does not have the required determinant."""


class NotSymplecticError(ContractError):
    """A matrix does not preserve the standard alternating form."""


class UnsupportedRingError(ContractError):
    """The ring lies outside the family an operation supports."""


class InfiniteQuotientError(ContractError):
    """A finite quotient ring was required but the quotient is infinite."""
