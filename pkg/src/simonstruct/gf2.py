"""GF(2) vectors, matrices and subspaces on packed integer bitsets.

Coordinate convention used across the package: coordinate x_1 is the least
significant bit of the packed word, and the text form writes x_1 first, so
the string "110" is the vector with x_1 = 1, x_2 = 1, x_3 = 0 (packed 0b011).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "BitVector",
    "BitMatrix",
    "Subspace",
    "SpanTracker",
    "rank",
    "null_space_basis",
    "span_equal",
    "in_span",
    "span_of",
    "MAX_DIMENSION",
]

# Vectors above 64 coordinates are out of scope for the packed representation.
MAX_DIMENSION = 64


def _check_dim(n: int) -> None:
    if not 1 <= n <= MAX_DIMENSION:
        raise ValueError(f"dimension {n} outside supported range 1..{MAX_DIMENSION}")


@dataclass(frozen=True)
class BitVector:
    """Immutable GF(2) vector of dimension n, packed with x_1 at bit 0."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_dim(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits 0x{self.bits:x} out of range for dimension {self.n}")

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Parse a '0'/'1' string written x_1 first."""
        text = text.strip()
        if not text or any(ch not in "01" for ch in text):
            raise ValueError(f"not a bit string: {text!r}")
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
        return cls(len(text), bits)

    @classmethod
    def zero(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls(n, (1 << n) - 1)

    def bit(self, i: int) -> int:
        """Coordinate x_i, 1-based."""
        if not 1 <= i <= self.n:
            raise ValueError(f"coordinate {i} out of range 1..{self.n}")
        return (self.bits >> (i - 1)) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return BitVector(self.n, self.bits ^ other.bits)

    def dot(self, other: "BitVector") -> int:
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return (self.bits & other.bits).bit_count() & 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __int__(self) -> int:
        return self.bits

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))


@dataclass(frozen=True)
class BitMatrix:
    """Immutable list of GF(2) row vectors sharing one dimension."""

    n: int
    rows: tuple[BitVector, ...]

    def __post_init__(self) -> None:
        _check_dim(self.n)
        for row in self.rows:
            if row.n != self.n:
                raise ValueError("dimension mismatch between matrix rows")

    @classmethod
    def from_ints(cls, n: int, rows: Iterable[int]) -> "BitMatrix":
        return cls(n, tuple(BitVector(n, r) for r in rows))

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "BitMatrix":
        vecs = tuple(BitVector.from_string(r) for r in rows)
        if not vecs:
            raise ValueError("cannot infer dimension from an empty string list")
        return cls(vecs[0].n, vecs)

    def row_ints(self) -> list[int]:
        return [r.bits for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows)


def _rref_ints(rows: Iterable[int], n: int) -> list[int]:
    """Reduced row echelon form, pivot columns ascending, zero rows dropped."""
    work = [r for r in rows]
    out: list[int] = []
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, len(work)):
            if (work[r] >> col) & 1:
                sel = r
                break
        if sel is None:
            continue
        work[row], work[sel] = work[sel], work[row]
        for r in range(len(work)):
            if r != row and (work[r] >> col) & 1:
                work[r] ^= work[row]
        row += 1
        if row == len(work):
            break
    out = work[:row]
    return out


def _rank_ints(rows: Iterable[int]) -> int:
    pivots: list[int] = []
    for r in rows:
        for p in pivots:
            low = p & -p
            if r & low:
                r ^= p
        if r:
            pivots.append(r)
    return len(pivots)


def _reduce_by_rref(v: int, basis: Iterable[int]) -> int:
    for b in basis:
        pivot = b & -b
        if v & pivot:
            v ^= b
    return v


class SpanTracker:
    """Incremental GF(2) span: add vectors, query rank and membership."""

    def __init__(self, n: int):
        _check_dim(n)
        self.n = n
        self._pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def reduce(self, bits: int) -> int:
        for p in self._pivots:
            low = p & -p
            if bits & low:
                bits ^= p
        return bits

    def contains(self, bits: int) -> bool:
        return self.reduce(bits) == 0

    def add(self, bits: int) -> bool:
        """Insert a vector; True when it enlarged the span."""
        red = self.reduce(bits)
        if red == 0:
            return False
        # keep rows mutually reduced so every pivot column stays unique
        self._pivots = _rref_ints(self._pivots + [red], self.n)
        return True

    def basis_ints(self) -> list[int]:
        return list(self._pivots)


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of GF(2)^n held as a canonical RREF basis."""

    basis: BitMatrix

    def __post_init__(self) -> None:
        ints = self.basis.row_ints()
        if _rref_ints(ints, self.basis.n) != ints:
            raise ValueError("subspace basis must be in reduced row echelon form")

    @property
    def n(self) -> int:
        return self.basis.n

    @property
    def dim(self) -> int:
        return len(self.basis.rows)

    def contains(self, v: BitVector) -> bool:
        if v.n != self.n:
            raise ValueError("dimension mismatch")
        return _reduce_by_rref(v.bits, self.basis.row_ints()) == 0

    def member_ints(self) -> np.ndarray:
        """All 2**dim member words as a sorted numpy array."""
        members = np.zeros(1, dtype=np.int64)
        for b in self.basis.row_ints():
            members = np.concatenate([members, members ^ b])
        members.sort()
        return members

    def members(self) -> Iterator[BitVector]:
        for m in self.member_ints():
            yield BitVector(self.n, int(m))

    def __str__(self) -> str:
        return str(self.basis)


def span_of(n: int, vectors: Iterable[BitVector | int]) -> Subspace:
    """Canonical subspace spanned by the given vectors (possibly none)."""
    ints = []
    for v in vectors:
        if isinstance(v, BitVector):
            if v.n != n:
                raise ValueError("dimension mismatch")
            ints.append(v.bits)
        else:
            ints.append(int(v))
    return Subspace(BitMatrix.from_ints(n, _rref_ints(ints, n)))


def rank(m: BitMatrix) -> int:
    """GF(2) rank of the matrix rows."""
    return _rank_ints(m.row_ints())


def null_space_basis(m: BitMatrix) -> Subspace:
    """Canonical basis of {s : every row r has r . s = 0}; dim = n - rank."""
    n = m.n
    rref = _rref_ints(m.row_ints(), n)
    pivot_cols = [(r & -r).bit_length() - 1 for r in rref]
    pivot_set = set(pivot_cols)
    vectors = []
    for col in range(n):
        if col in pivot_set:
            continue
        v = 1 << col
        for prow, pcol in zip(rref, pivot_cols):
            if (prow >> col) & 1:
                v |= 1 << pcol
        vectors.append(v)
    return Subspace(BitMatrix.from_ints(n, _rref_ints(vectors, n)))


def span_equal(a: Subspace, b: Subspace) -> bool:
    """Row spans are equal; canonical RREF bases make this a plain compare."""
    if a.n != b.n:
        raise ValueError("dimension mismatch")
    return a.basis.row_ints() == b.basis.row_ints()


def in_span(v: BitVector, s: Subspace) -> bool:
    return s.contains(v)
