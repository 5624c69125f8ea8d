"""
certificate.py
==============

Self-verifying records of lifted matrices.

A :class:`LiftCertificate` stores the lifted matrix ``B``, the target rows,
the row ideals and the congruence level.  Every verdict it carries can be
recomputed from those fields alone, which is what
:func:`verify_certificate` does.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Sequence, Tuple

from ..errors import MalformedInputError
from ..groups import RMatrix, det, is_symplectic
from ..rings import BaseRing, Ideal, RingElem


class GroupKind(str, Enum):
    SL = "sl"
    SP = "sp"


@dataclass(frozen=True)
class CongruenceLevel:
    """The principal congruence subgroup of level ``ideal`` in ``SL_{k+1}`` or ``Sp_{2k}``."""

    ideal: Ideal
    kind: GroupKind
    k: int

    @property
    def dimension(self) -> int:
        return self.k + 1 if self.kind is GroupKind.SL else 2 * self.k

    def contains(self, matrix: RMatrix) -> bool:
        """True iff ``matrix ≡ Id`` modulo the level."""
        g = self.ideal.generator
        n = self.dimension
        if matrix.shape != (n, n):
            return False
        one = matrix.ring.one
        return all(
            g.divides(matrix[i, j] - one if i == j else matrix[i, j])
            for i in range(n)
            for j in range(n)
        )

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "k": self.k, "level": self.ideal.generator.to_json()}


def row_congruent(row: Sequence[RingElem], target: Sequence[RingElem], ideal: Ideal) -> bool:
    if len(row) != len(target):
        return False
    return all(ideal.generator.divides(a - b) for a, b in zip(row, target))


def compute_verdicts(
    level: CongruenceLevel,
    matrix: RMatrix,
    rows: Sequence[Sequence[RingElem]],
    ideals: Sequence[Ideal],
) -> Dict[str, Any]:
    """Recompute every check of a certificate from scratch."""
    n = level.dimension
    square = matrix.shape == (n, n)
    verdicts: Dict[str, Any] = {"det": square and det(matrix) == matrix.ring.one}
    if level.kind is GroupKind.SP:
        verdicts["form"] = square and n % 2 == 0 and is_symplectic(matrix)
    verdicts["rows"] = [
        square and (ideal.is_unit or row_congruent(matrix.row(i), target, ideal))
        for i, (target, ideal) in enumerate(zip(rows, ideals))
    ]
    verdicts["level"] = square and level.contains(matrix)
    return verdicts


def _all_true(verdicts: Dict[str, Any]) -> bool:
    return all(all(v) if isinstance(v, list) else bool(v) for v in verdicts.values())


@dataclass(frozen=True)
class LiftCertificate:
    """``B`` in the level-``J`` congruence subgroup with ``row_i(B) ≡ a_i (mod I_i)``."""

    level: CongruenceLevel
    matrix: RMatrix
    rows: Tuple[Tuple[RingElem, ...], ...]
    ideals: Tuple[Ideal, ...]
    verdicts: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def issue(
        cls,
        level: CongruenceLevel,
        matrix: RMatrix,
        rows: Sequence[Sequence[RingElem]],
        ideals: Sequence[Ideal],
    ) -> "LiftCertificate":
        rows = tuple(tuple(r) for r in rows)
        ideals = tuple(ideals)
        return cls(level, matrix, rows, ideals, compute_verdicts(level, matrix, rows, ideals))

    @property
    def valid(self) -> bool:
        return _all_true(self.verdicts)

    def to_json(self) -> dict:
        return {
            "B": self.matrix.to_json(),
            "rows": [[e.to_json() for e in r] for r in self.rows],
            "ideals": [i.generator.to_json() for i in self.ideals],
            "level": self.level.ideal.generator.to_json(),
            "verdicts": self.verdicts,
            "group": {"kind": self.level.kind.value, "k": self.level.k},
        }

    @classmethod
    def from_json(cls, data: dict) -> "LiftCertificate":
        try:
            matrix = RMatrix.from_json(data["B"])
            ring = matrix.ring
            if not isinstance(ring, BaseRing):
                raise MalformedInputError("certificate matrices live over the base ring")
            group = data["group"]
            level = CongruenceLevel(Ideal.principal(ring, data["level"]), GroupKind(group["kind"]), int(group["k"]))
            rows = tuple(tuple(ring.element(v) for v in r) for r in data["rows"])
            ideals = tuple(Ideal.principal(ring, g) for g in data["ideals"])
            verdicts = dict(data.get("verdicts", {}))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, MalformedInputError):
                raise
            raise MalformedInputError(f"malformed certificate document: {exc}") from exc
        return cls(level, matrix, rows, ideals, verdicts)


def verify_certificate(certificate: LiftCertificate) -> bool:
    """Recompute every verdict; true iff all hold and the stored ones agree."""
    if len(certificate.rows) != len(certificate.ideals):
        return False
    fresh = compute_verdicts(certificate.level, certificate.matrix, certificate.rows, certificate.ideals)
    if certificate.verdicts and certificate.verdicts != fresh:
        return False
    return _all_true(fresh)


def identity_certificate(level: CongruenceLevel) -> LiftCertificate:
    ring = level.ideal.ring
    return LiftCertificate.issue(level, RMatrix.identity(ring, level.dimension), [], [])
