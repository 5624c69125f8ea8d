"""
words.py
========

Words in elementary matrices ``E_ij(t) = Id + t e_ij`` (``i != j``).

A word is an ordered list of factors multiplied left to right; the empty
word is the identity.  Applying a factor to a matrix from the left is the
row operation ``row_i += t * row_j``, which is how the decomposition
routines build words.

The two closed forms below are the standard ones for ``SL_2``::

    T    = E_12(-1) E_21(1) E_12(-1)                         = [[0, -1], [1, 0]]
    D(s) = E_21(s^-1) E_12(1 - s) E_21(-1) E_12(1 - s^-1)    = diag(s, s^-1)

with 1-based indices as written; the code uses 0-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, List, Tuple

from ..errors import ContractError, MalformedInputError, NotUnitError
from ..rings import QuotRing
from .matrix import Entry, Ring, RMatrix, coerce, ring_from_dict, ring_to_dict


@dataclass(frozen=True)
class ElemFactor:
    """The elementary matrix ``Id + t e_ij``."""

    i: int
    j: int
    t: Entry

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise ContractError(f"elementary factor needs i != j, got ({self.i}, {self.j})")

    def inverse(self) -> "ElemFactor":
        return ElemFactor(self.i, self.j, -self.t)

    def apply_rows(self, rows: List[List[Entry]]) -> None:
        """Left-multiply in place: ``row_i += t * row_j``."""
        if self.t.is_zero():
            return
        src = rows[self.j]
        rows[self.i] = [a + self.t * b for a, b in zip(rows[self.i], src)]

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "t": self.t.to_json()}


@dataclass(frozen=True)
class ElemWord:
    """An ordered product of elementary factors acting on ``n x n`` matrices.

    Attributes
    ----------
    ring : BaseRing or QuotRing
        Ring of the factor entries.
    n : int
        Matrix size.
    factors : tuple of ElemFactor
        Factors, multiplied left to right.
    """

    ring: Ring
    n: int
    factors: Tuple[ElemFactor, ...] = ()

    def __post_init__(self) -> None:
        for f in self.factors:
            if not (0 <= f.i < self.n and 0 <= f.j < self.n):
                raise ContractError(f"factor indices ({f.i}, {f.j}) out of range for n={self.n}")

    @classmethod
    def build(cls, ring: Ring, n: int, triples: Iterable[Tuple[int, int, Any]]) -> "ElemWord":
        return cls(ring, n, tuple(ElemFactor(i, j, coerce(ring, t)) for i, j, t in triples))

    def __len__(self) -> int:
        return len(self.factors)

    def __add__(self, other: "ElemWord") -> "ElemWord":
        if other.ring != self.ring or other.n != self.n:
            raise ContractError("cannot concatenate words over different rings or sizes")
        return ElemWord(self.ring, self.n, self.factors + other.factors)

    def inverse(self) -> "ElemWord":
        return ElemWord(self.ring, self.n, tuple(f.inverse() for f in reversed(self.factors)))

    def reduce(self, q: QuotRing) -> "ElemWord":
        """Map every factor entry into the quotient ``q``."""
        return ElemWord(q, self.n, tuple(ElemFactor(f.i, f.j, coerce(q, f.t)) for f in self.factors))

    def lift(self) -> "ElemWord":
        """Replace every entry by its canonical base-ring representative."""
        if not isinstance(self.ring, QuotRing):
            return self
        return ElemWord(self.ring.base, self.n, tuple(ElemFactor(f.i, f.j, f.t.rep) for f in self.factors))

    def to_json(self) -> dict:
        return {"ring": ring_to_dict(self.ring), "n": self.n, "factors": [f.to_json() for f in self.factors]}

    @classmethod
    def from_json(cls, data: dict) -> "ElemWord":
        try:
            ring = ring_from_dict(data["ring"])
            return cls.build(ring, int(data["n"]), ((f["i"], f["j"], f["t"]) for f in data["factors"]))
        except (KeyError, TypeError) as exc:
            raise MalformedInputError(f"malformed word document: {exc}") from exc


def word_to_matrix(word: ElemWord) -> RMatrix:
    """Left-to-right product of the factors of ``word``."""
    rows = [list(r) for r in RMatrix.identity(word.ring, word.n).rows]
    # f_1 f_2 ... f_m = f_1 (f_2 (... (f_m Id))), so apply from the right end
    for factor in reversed(word.factors):
        factor.apply_rows(rows)
    return RMatrix(word.ring, tuple(tuple(r) for r in rows))


def apply_word(word: ElemWord, matrix: RMatrix) -> RMatrix:
    """``word_to_matrix(word) @ matrix`` computed with row operations."""
    rows = [list(r) for r in matrix.rows]
    for factor in reversed(word.factors):
        factor.apply_rows(rows)
    return RMatrix(matrix.ring, tuple(tuple(r) for r in rows))


def transposition_word(ring: Ring, n: int = 2, first: int = 0) -> ElemWord:
    """``T = [[0, -1], [1, 0]]`` on rows/columns ``first, first + 1``."""
    if not 0 <= first < n - 1:
        raise ContractError(f"index pair ({first}, {first + 1}) outside size {n}")
    i, j = first, first + 1
    return ElemWord.build(ring, n, [(i, j, -1), (j, i, 1), (i, j, -1)])


def diag_word(ring: Ring, s: Any, n: int = 2, first: int = 0) -> ElemWord:
    """``D(s) = diag(s, s^-1)`` on rows/columns ``first, first + 1``.

    Raises
    ------
    NotUnitError
        If ``s`` is not a unit of ``ring``.
    """
    if not 0 <= first < n - 1:
        raise ContractError(f"index pair ({first}, {first + 1}) outside size {n}")
    s = coerce(ring, s)
    if not s.is_unit():
        raise NotUnitError(f"{s} is not a unit of {ring}")
    u = s.inverse()
    one = coerce(ring, 1)
    i, j = first, first + 1
    return ElemWord.build(ring, n, [(j, i, u), (i, j, one - s), (j, i, -one), (i, j, one - u)])

