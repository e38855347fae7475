"""Dense linear algebra over GF(2) on bit-packed integers.

A vector is a Python int with coordinate i stored in bit i (least
significant bit first); a matrix is a tuple of such ints, one per row.
Row elimination -- the inner loop of everything here -- is then a single
integer XOR, and arbitrary dimensions come for free from arbitrary
precision.  Bits above the declared length are kept at zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def parity(x: int) -> int:
    """Parity of the number of set bits of a non-negative int."""
    return x.bit_count() & 1


@dataclass(frozen=True)
class BitVector:
    """Immutable GF(2) vector of fixed length."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("set bits beyond declared length")

    @classmethod
    def zero(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @classmethod
    def basis(cls, length: int, i: int) -> "BitVector":
        if not 0 <= i < length:
            raise ValueError(f"basis index {i} out of range for length {length}")
        return cls(length, 1 << i)

    @classmethod
    def from_coords(cls, coords: Iterable[int]) -> "BitVector":
        bits = 0
        n = 0
        for c in coords:
            if c & 1:
                bits |= 1 << n
            n += 1
        return cls(n, bits)

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        """Parse a 0/1 string; character position i is coordinate i."""
        if set(s) - {"0", "1"}:
            raise ValueError(f"not a bit string: {s!r}")
        return cls(len(s), sum(1 << i for i, ch in enumerate(s) if ch == "1"))

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.length) if (self.bits >> i) & 1)

    def to01(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))

    def __str__(self) -> str:
        return self.to01()


@dataclass(frozen=True)
class BitMatrix:
    """Immutable GF(2) matrix; data[i] is row i, bit-packed."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.data) != self.rows:
            raise ValueError("row count does not match data")
        for r in self.data:
            if r < 0 or r >> self.cols:
                raise ValueError("row has set bits beyond declared width")

    @classmethod
    def zero(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, vectors: Sequence[BitVector], cols: int | None = None) -> "BitMatrix":
        if cols is None:
            if not vectors:
                raise ValueError("cols is required for an empty row list")
            cols = vectors[0].length
        for v in vectors:
            if v.length != cols:
                raise ValueError("rows of unequal length")
        return cls(len(vectors), cols, tuple(v.bits for v in vectors))

    @classmethod
    def from_strings(cls, lines: Sequence[str], cols: int | None = None) -> "BitMatrix":
        return cls.from_rows([BitVector.from_string(s) for s in lines], cols)

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.data[i])

    def column(self, j: int) -> BitVector:
        if not 0 <= j < self.cols:
            raise IndexError(j)
        bits = 0
        for i, r in enumerate(self.data):
            bits |= ((r >> j) & 1) << i
        return BitVector(self.rows, bits)

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, r in enumerate(self.data):
            t = r
            while t:
                low = t & -t
                out[low.bit_length() - 1] |= 1 << i
                t ^= low
        return BitMatrix(self.cols, self.rows, tuple(out))

    def apply(self, v: BitVector) -> BitVector:
        """Matrix times column vector."""
        if v.length != self.cols:
            raise ValueError("length mismatch")
        bits = 0
        for i, r in enumerate(self.data):
            if (r & v.bits).bit_count() & 1:
                bits |= 1 << i
        return BitVector(self.rows, bits)

    def __xor__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return BitMatrix(self.rows, self.cols,
                         tuple(a ^ b for a, b in zip(self.data, other.data)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def to01_rows(self) -> list[str]:
        return [self.row(i).to01() for i in range(self.rows)]

    def __str__(self) -> str:
        return "\n".join(self.to01_rows())


def rank_rows(data: Iterable[int]) -> int:
    """GF(2) rank of packed rows, by elimination on the lowest set bit."""
    pivots: dict[int, int] = {}
    count = 0
    for r in data:
        while r:
            low = r & -r
            p = pivots.get(low)
            if p is None:
                pivots[low] = r
                count += 1
                break
            r ^= p
    return count


def rank(m: BitMatrix) -> int:
    return rank_rows(m.data)


def multiply(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2)."""
    if a.cols != b.rows:
        raise ValueError(
            f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    out = []
    for ra in a.data:
        acc = 0
        t = ra
        while t:
            low = t & -t
            acc ^= b.data[low.bit_length() - 1]
            t ^= low
        out.append(acc)
    return BitMatrix(a.rows, b.cols, tuple(out))


def _rref(data: Sequence[int], cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.

    Pivots are chosen left to right by first set bit; returns the reduced
    rows (original count, zero rows at the bottom) and the pivot columns.
    """
    rows = list(data)
    pivot_cols: list[int] = []
    r = 0
    for c in range(cols):
        bit = 1 << c
        pr = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivot_cols.append(c)
        r += 1
    return rows, pivot_cols


def solve(m: BitMatrix, v: BitVector) -> BitVector | None:
    """Some x with m @ x = v, or None if v is outside the image.

    Deterministic: free variables are set to zero, so the result is the
    lexicographically least solution in the free coordinates.
    """
    if m.rows != v.length:
        raise ValueError("dimension mismatch between matrix and right-hand side")
    aug = [row | (((v.bits >> i) & 1) << m.cols) for i, row in enumerate(m.data)]
    reduced, pivot_cols = _rref(aug, m.cols)
    rhs_bit = 1 << m.cols
    for row in reduced[len(pivot_cols):]:
        if row & rhs_bit:
            return None
    x = 0
    for r, c in enumerate(pivot_cols):
        if reduced[r] & rhs_bit:
            x |= 1 << c
    return BitVector(m.cols, x)


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """Basis of the null space, one vector per free column, in column order."""
    reduced, pivot_cols = _rref(m.data, m.cols)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        bits = 1 << free
        for r, c in enumerate(pivot_cols):
            if (reduced[r] >> free) & 1:
                bits |= 1 << c
        basis.append(BitVector(m.cols, bits))
    return basis


def inverse(m: BitMatrix) -> BitMatrix:
    """Inverse of a square matrix; raises ValueError if singular."""
    if not m.is_square():
        raise ValueError("only square matrices can be inverted")
    n = m.rows
    aug = [row | (1 << (n + i)) for i, row in enumerate(m.data)]
    reduced, pivot_cols = _rref(aug, n)
    if len(pivot_cols) != n:
        raise ValueError("matrix is singular")
    return BitMatrix(n, n, tuple(row >> n for row in reduced))
