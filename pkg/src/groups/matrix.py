"""
matrix.py
=========

Exact matrices over a base ring (``Z``, ``F_p[x]``) or over a quotient ring
``R/<g>``.  Entries are :class:`~src.rings.base.RingElem` values in the first
case and canonical :class:`~src.rings.quotient.Residue` values in the second.

Determinants use cofactor expansion up to size four and fraction-free
(Bareiss) elimination above; over quotient rings the elimination runs on the
representatives in the base domain and the result is reduced at the end.
The symplectic form is fixed as ``Omega = [[0, Id_k], [-Id_k, 0]]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Sequence, Tuple, Union

from ..errors import ContractError, MalformedInputError, NotUnitError, RingMismatchError
from ..rings import BaseRing, QuotRing, Residue, RingElem

Ring = Union[BaseRing, QuotRing]
Entry = Union[RingElem, Residue]


# ----------------------------------------------------------------------
# Ring tags
# ----------------------------------------------------------------------


def coerce(ring: Ring, value: Any) -> Entry:
    """Coerce ``value`` into ``ring`` (base element or canonical residue)."""
    if isinstance(ring, QuotRing):
        if isinstance(value, Residue):
            if value.parent == ring:
                return value
            value = value.rep
        return ring(value)
    if isinstance(value, Residue):
        value = value.rep
    return ring.element(value)


def base_of(ring: Ring) -> BaseRing:
    return ring.base if isinstance(ring, QuotRing) else ring


def ring_to_dict(ring: Ring) -> dict:
    if isinstance(ring, QuotRing):
        data = ring.base.to_dict()
        data["modulus"] = ring.modulus.generator.to_json()
        return data
    return ring.to_dict()


def ring_from_dict(data: dict) -> Ring:
    base = BaseRing.from_dict(data)
    if "modulus" in data:
        return QuotRing.of(base, data["modulus"])
    return base


def _zero(ring: Ring) -> Entry:
    return ring.zero


def _one(ring: Ring) -> Entry:
    return ring.one


# ----------------------------------------------------------------------
# Matrices
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class RMatrix:
    """An immutable matrix with entries in ``ring``.

    Attributes
    ----------
    ring : BaseRing or QuotRing
        The ring tag.
    rows : tuple of tuples
        Entries, row-major, canonical in ``ring``.
    """

    ring: Ring
    rows: Tuple[Tuple[Entry, ...], ...]

    @classmethod
    def from_values(cls, ring: Ring, rows: Sequence[Sequence[Any]]) -> "RMatrix":
        """Build a matrix, coercing every entry into ``ring``."""
        rows = [list(r) for r in rows]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise MalformedInputError("matrix rows must have equal length")
        return cls(ring, tuple(tuple(coerce(ring, v) for v in r) for r in rows))

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "RMatrix":
        zero, one = _zero(ring), _one(ring)
        return cls(ring, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, ring: Ring, n_rows: int, n_cols: int) -> "RMatrix":
        zero = _zero(ring)
        return cls(ring, tuple(tuple(zero for _ in range(n_cols)) for _ in range(n_rows)))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, index: Tuple[int, int]) -> Entry:
        i, j = index
        return self.rows[i][j]

    def row(self, i: int) -> Tuple[Entry, ...]:
        return self.rows[i]

    def transpose(self) -> "RMatrix":
        return RMatrix(self.ring, tuple(zip(*self.rows)) if self.rows else ())

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot multiply matrices over {self.ring} and {other.ring}")
        if self.n_cols != other.n_rows:
            raise ContractError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        zero = _zero(self.ring)
        out = []
        for r in self.rows:
            new_row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    acc = acc + a * b
                new_row.append(acc)
            out.append(tuple(new_row))
        return RMatrix(self.ring, tuple(out))

    def __neg__(self) -> "RMatrix":
        return RMatrix(self.ring, tuple(tuple(-e for e in r) for r in self.rows))

    def with_entry(self, i: int, j: int, value: Any) -> "RMatrix":
        rows = [list(r) for r in self.rows]
        rows[i][j] = coerce(self.ring, value)
        return RMatrix(self.ring, tuple(tuple(r) for r in rows))

    def reduce(self, q: QuotRing) -> "RMatrix":
        """Image in ``q``; from a quotient ring only coarser moduli are allowed."""
        if isinstance(self.ring, QuotRing):
            if self.ring.base != q.base:
                raise RingMismatchError(f"cannot reduce from {self.ring} to {q}")
            if not q.modulus.contains(self.ring.modulus.generator):
                raise ContractError(f"{q} is not a quotient of {self.ring}")
        elif self.ring != q.base:
            raise RingMismatchError(f"cannot reduce from {self.ring} to {q}")
        return RMatrix.from_values(q, self.rows)

    def lift(self) -> "RMatrix":
        """Canonical representatives as a matrix over the base ring."""
        if not isinstance(self.ring, QuotRing):
            return self
        base = self.ring.base
        return RMatrix(base, tuple(tuple(e.rep for e in r) for r in self.rows))

    def is_identity(self) -> bool:
        return self.is_square and self == RMatrix.identity(self.ring, self.n_rows)

    def sort_key(self) -> Tuple[int, ...]:
        """Row-major tuple of entry sort keys; orders enumeration output."""
        return tuple(e.sort_key() for r in self.rows for e in r)

    def to_int_rows(self) -> Tuple[Tuple[int, ...], ...]:
        """Entries as plain ints (integer base or ``Z/n``)."""
        return tuple(tuple(int(e) for e in r) for r in self.rows)

    def to_json(self) -> dict:
        return {"ring": ring_to_dict(self.ring), "rows": [[e.to_json() for e in r] for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "RMatrix":
        try:
            ring = ring_from_dict(data["ring"])
            return cls.from_values(ring, data["rows"])
        except (KeyError, TypeError) as exc:
            raise MalformedInputError(f"malformed matrix document: {exc}") from exc

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows) + "]"


# ----------------------------------------------------------------------
# Determinants and inverses
# ----------------------------------------------------------------------


def _det_cofactor(rows: Sequence[Sequence[Entry]], zero: Entry) -> Entry:
    n = len(rows)
    if n == 0:
        return zero + 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = zero
    for j, a in enumerate(rows[0]):
        if a.is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * _det_cofactor(minor, zero)
        total = total + term if j % 2 == 0 else total - term
    return total


def _det_bareiss(rows: Sequence[Sequence[RingElem]], ring: BaseRing) -> RingElem:
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return ring.zero
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] if sign == 1 else -a[n - 1][n - 1]


def det(matrix: RMatrix) -> Entry:
    """Exact determinant of a square matrix."""
    if not matrix.is_square:
        raise ContractError(f"determinant of a non-square {matrix.shape} matrix")
    if matrix.n_rows <= 4:
        return _det_cofactor(matrix.rows, _zero(matrix.ring))
    lifted = matrix.lift()
    value = _det_bareiss(lifted.rows, base_of(matrix.ring))
    return coerce(matrix.ring, value)


def adjugate(matrix: RMatrix) -> RMatrix:
    n = matrix.n_rows
    if not matrix.is_square:
        raise ContractError("adjugate of a non-square matrix")
    if n == 1:
        return RMatrix.identity(matrix.ring, 1)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = RMatrix(
                matrix.ring,
                tuple(r[:j] + r[j + 1:] for k, r in enumerate(matrix.rows) if k != i),
            )
            cof = det(minor)
            out[j][i] = cof if (i + j) % 2 == 0 else -cof
    return RMatrix(matrix.ring, tuple(tuple(r) for r in out))


def inverse(matrix: RMatrix) -> RMatrix:
    """Inverse of a matrix whose determinant is a unit."""
    d = det(matrix)
    if not d.is_unit():
        raise NotUnitError(f"determinant {d} is not a unit; matrix is not invertible")
    d_inv = d.inverse()
    adj = adjugate(matrix)
    return RMatrix(matrix.ring, tuple(tuple(e * d_inv for e in r) for r in adj.rows))


# ----------------------------------------------------------------------
# Symplectic form
# ----------------------------------------------------------------------


def omega(ring: Ring, k: int) -> RMatrix:
    """The standard alternating form ``[[0, Id_k], [-Id_k, 0]]``."""
    zero, one = _zero(ring), _one(ring)
    rows = []
    for i in range(2 * k):
        row = []
        for j in range(2 * k):
            if j == i + k:
                row.append(one)
            elif i == j + k:
                row.append(-one)
            else:
                row.append(zero)
        rows.append(tuple(row))
    return RMatrix(ring, tuple(rows))


def form(u: Sequence[Entry], v: Sequence[Entry]) -> Entry:
    """``<u, v> = u Omega v^T = sum_j u_j v_{k+j} - u_{k+j} v_j``."""
    k = len(u) // 2
    total = u[0] * 0
    for j in range(k):
        total = total + u[j] * v[k + j] - u[k + j] * v[j]
    return total


def is_symplectic(matrix: RMatrix, k: Optional[int] = None) -> bool:
    """True iff ``M^T Omega M == Omega`` exactly.

    Raises
    ------
    ContractError
        For non-square or odd-dimensional input, or when ``k`` disagrees
        with the size.
    """
    if not matrix.is_square or matrix.n_rows % 2:
        raise ContractError(f"symplectic test needs an even square matrix, got {matrix.shape}")
    if k is None:
        k = matrix.n_rows // 2
    if 2 * k != matrix.n_rows:
        raise ContractError(f"matrix of size {matrix.n_rows} is not 2k x 2k for k={k}")
    w = omega(matrix.ring, k)
    return matrix.transpose() @ w @ matrix == w


def symplectic_inverse(matrix: RMatrix) -> RMatrix:
    """``M^{-1} = -Omega M^T Omega`` for symplectic ``M``."""
    w = omega(matrix.ring, matrix.n_rows // 2)
    return -(w @ matrix.transpose() @ w)


def symplectic_elementary(ring: Ring, k: int, kind: str, a: int, t: Any, b: Optional[int] = None) -> RMatrix:
    """Elementary symplectic matrices acting on ``2k`` coordinates.

    ``kind`` selects the generator:

    ``"X"``  ``Id + t (e_ab - e_{k+b,k+a})`` for ``a != b`` (block ``diag(A, A^-T)``)
    ``"Y"``  ``Id + t e_{k+a,a}`` (lower unipotent, symmetric block ``t e_aa``)
    ``"Z"``  ``Id + t e_{a,k+a}`` (upper unipotent)
    """
    t = coerce(ring, t)
    rows = [list(r) for r in RMatrix.identity(ring, 2 * k).rows]
    if kind == "X":
        if b is None or a == b:
            raise ContractError("X generator needs two distinct indices")
        rows[a][b] = rows[a][b] + t
        rows[k + b][k + a] = rows[k + b][k + a] - t
    elif kind == "Y":
        rows[k + a][a] = rows[k + a][a] + t
    elif kind == "Z":
        rows[a][k + a] = rows[a][k + a] + t
    else:
        raise ContractError(f"unknown symplectic generator {kind!r}")
    return RMatrix(ring, tuple(tuple(r) for r in rows))
