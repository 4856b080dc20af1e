"""Dense bit-packed linear algebra over GF(2).

Vectors are Python ints used as bitsets (bit ``i`` is coordinate ``i``),
wrapped with their length so padding stays canonical. Elimination and the
Gray-code search run in ``embedcert._backend.kernels``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _backend

WORD_BITS = 64


@dataclass(frozen=True)
class BitVector:
    """A GF(2) vector of fixed length; bits past ``length`` are always zero."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits set beyond length {self.length}")

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> BitVector:
        bits = 0
        for i in indices:
            if not 0 <= i < length:
                raise IndexError(f"index {i} out of range for length {length}")
            bits ^= 1 << i
        return cls(length, bits)

    @classmethod
    def from_list(cls, values: Sequence[int]) -> BitVector:
        return cls.from_indices(len(values), (i for i, x in enumerate(values) if x & 1))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def words(self) -> tuple[int, ...]:
        """Packed 64-bit words, least significant word first."""
        n = max(1, -(-self.length // WORD_BITS))
        mask = (1 << WORD_BITS) - 1
        return tuple((self.bits >> (WORD_BITS * k)) & mask for k in range(n))

    def indices(self) -> list[int]:
        out = []
        b = self.bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return out

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __xor__(self, other: BitVector) -> BitVector:
        _check_len(self.length, other.length)
        return BitVector(self.length, self.bits ^ other.bits)

    def __and__(self, other: BitVector) -> BitVector:
        _check_len(self.length, other.length)
        return BitVector(self.length, self.bits & other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __len__(self) -> int:
        return self.length


def _check_len(a: int, b: int) -> None:
    if a != b:
        raise ValueError(f"length mismatch: {a} != {b}")


@dataclass(frozen=True)
class BitMatrix:
    """Row-major GF(2) matrix; each row is an int bitset over ``ncols`` columns."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError("row count does not match nrows")
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise ValueError(f"row has bits beyond column {self.ncols}")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> BitMatrix:
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], ncols: int | None = None) -> BitMatrix:
        if ncols is None:
            ncols = len(dense[0]) if dense else 0
        rows = []
        for line in dense:
            if len(line) != ncols:
                raise ValueError("ragged matrix")
            rows.append(BitVector.from_list(line).bits)
        return cls(len(rows), ncols, tuple(rows))

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector], ncols: int | None = None) -> BitMatrix:
        if ncols is None:
            if not vectors:
                raise ValueError("ncols required for an empty row list")
            ncols = vectors[0].length
        for v in vectors:
            _check_len(v.length, ncols)
        return cls(len(vectors), ncols, tuple(v.bits for v in vectors))

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def to_dense(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def transpose(self) -> BitMatrix:
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            b = r
            while b:
                low = b & -b
                cols[low.bit_length() - 1] |= 1 << i
                b ^= low
        return BitMatrix(self.ncols, self.nrows, tuple(cols))

    def column_weights(self) -> list[int]:
        counts = [0] * self.ncols
        for r in self.rows:
            b = r
            while b:
                low = b & -b
                counts[low.bit_length() - 1] += 1
                b ^= low
        return counts

    def mul_vec(self, v: BitVector) -> BitVector:
        _check_len(self.ncols, v.length)
        out = 0
        for i, r in enumerate(self.rows):
            if (r & v.bits).bit_count() & 1:
                out |= 1 << i
        return BitVector(self.nrows, out)

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        _check_len(self.ncols, other.nrows)
        out = []
        for r in self.rows:
            acc = 0
            b = r
            while b:
                low = b & -b
                acc ^= other.rows[low.bit_length() - 1]
                b ^= low
            out.append(acc)
        return BitMatrix(self.nrows, other.ncols, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.rows)


def rref(M: BitMatrix) -> tuple[list[int], list[int]]:
    """Reduced row echelon form as (nonzero rows, pivot columns)."""
    return _backend.kernels.rref(list(M.rows), M.ncols)


def rank(M: BitMatrix) -> int:
    return len(rref(M)[1])


def kernel_basis(M: BitMatrix) -> list[BitVector]:
    """Canonical basis of ``{v : M v = 0}``.

    One vector per free column, free columns in increasing order; the vector
    for free column ``c`` has bit ``c`` plus the pivot bits of the RREF rows
    that contain ``c``.
    """
    rows, pivots = rref(M)
    pivot_set = set(pivots)
    basis = []
    for c in range(M.ncols):
        if c in pivot_set:
            continue
        bits = 1 << c
        fbit = 1 << c
        for prow, p in zip(rows, pivots):
            if prow & fbit:
                bits |= 1 << p
        basis.append(BitVector(M.ncols, bits))
    return basis


class EchelonBasis:
    """Incrementally maintained echelon set for span membership.

    Each stored row is keyed by its lowest set bit; inserting reduces the new
    vector against stored rows in increasing pivot order.
    """

    def __init__(self, length: int, vectors: Iterable[BitVector] = ()):
        self.length = length
        self._rows: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, bits: int) -> int:
        while bits:
            low = (bits & -bits).bit_length() - 1
            row = self._rows.get(low)
            if row is None:
                return bits
            bits ^= row
        return 0

    def add(self, v: BitVector) -> bool:
        """Insert ``v``; returns False (and stores nothing) if it was dependent."""
        _check_len(self.length, v.length)
        red = self.reduce(v.bits)
        if not red:
            return False
        self._rows[(red & -red).bit_length() - 1] = red
        return True

    def contains(self, v: BitVector) -> bool:
        _check_len(self.length, v.length)
        return self.reduce(v.bits) == 0

    def copy(self) -> EchelonBasis:
        other = EchelonBasis(self.length)
        other._rows = dict(self._rows)
        return other


def is_in_span(basis: Sequence[BitVector], v: BitVector) -> bool:
    for b in basis:
        _check_len(b.length, v.length)
    return EchelonBasis(v.length, basis).contains(v)


def min_weight_combination(basis: Sequence[BitVector], stop_at: int = 0) -> tuple[int, BitVector] | None:
    """Minimum-weight nonzero vector in the span of a linearly independent basis.

    Exhaustive over all 2^r - 1 combinations (Gray-code order), stopping
    early once weight ``<= stop_at`` is reached. None for an empty basis.
    """
    if not basis:
        return None
    length = basis[0].length
    for b in basis:
        _check_len(b.length, length)
    w, bits = _backend.kernels.min_weight_combination([b.bits for b in basis], length, stop_at)
    return w, BitVector(length, bits)
