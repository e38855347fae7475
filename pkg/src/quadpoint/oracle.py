"""Independent brute-force verification engines.

These deliberately avoid the structural algorithms they are used to
check: group membership by filtering the full linear group, the Arf
invariant by counting g-values over the whole space, and the rank-parity
homomorphism law by tabulating every product.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import guards
from .gf2 import BitMatrix, BitVector, multiply, parity, rank_rows
from .orthogroup import OrthogonalMap, _is_orthogonal_data, rank_parity, transvection
from .quadform import QuadraticForm, _evaluate_bits, _require_nondegenerate


def matrix_key(m: BitMatrix) -> str:
    """Canonical sort key: the row-major bit string."""
    return "".join(m.to01_rows())


@dataclass(frozen=True)
class GroupTable:
    """A finite orthogonal group as an ordered element list with parities."""

    form: QuadraticForm
    elements: tuple[BitMatrix, ...]
    psi_values: tuple[int, ...]

    @classmethod
    def from_elements(cls, f: QuadraticForm, elements) -> "GroupTable":
        ordered = sorted(elements, key=matrix_key)
        return cls(f, tuple(ordered), tuple(rank_parity(m) for m in ordered))


def filter_full_linear_group(f: QuadraticForm) -> GroupTable:
    """All invertible matrices preserving f, by scanning the full matrix space."""
    dim = f.dim
    guards.check_dim(dim, 4, "full linear group filtering")
    mask = (1 << dim) - 1
    found = []
    for code in range(1 << (dim * dim)):
        data = tuple((code >> (i * dim)) & mask for i in range(dim))
        if rank_rows(data) == dim and _is_orthogonal_data(f, data):
            found.append(BitMatrix(dim, dim, data))
    return GroupTable.from_elements(f, found)


def democratic_arf(f: QuadraticForm) -> int:
    """Arf invariant by majority vote: 0 iff g vanishes on most vectors.

    Scans all 2^dim vectors in Gray-code order so each step updates g by
    a single polarization increment.
    """
    _require_nondegenerate(f)
    guards.check_dim(f.dim, 20, "the democratic g-value count")
    dim = f.dim
    gram = f.gram.data
    gbits = f.basis_g.bits
    zeros = 1  # v = 0 has g = 0
    value = 0
    v = 0
    for k in range(1, 1 << dim):
        low = k & -k
        i = low.bit_length() - 1
        value ^= ((gbits >> i) & 1) ^ parity(gram[i] & v)
        v ^= low
        zeros += value ^ 1
    return 0 if 2 * zeros > (1 << dim) else 1


def homomorphism_table(table: GroupTable) -> bool:
    """Whether parity is additive over every ordered product and non-trivial."""
    index = {m.data: p for m, p in zip(table.elements, table.psi_values)}
    if 1 not in table.psi_values:
        return False
    datas = [m.data for m in table.elements]
    for m1, p1 in zip(datas, table.psi_values):
        for m2, p2 in zip(datas, table.psi_values):
            out = []
            for row in m1:
                acc = 0
                t = row
                while t:
                    low = t & -t
                    acc ^= m2[low.bit_length() - 1]
                    t ^= low
                out.append(acc)
            q = index.get(tuple(out))
            if q is None or q != p1 ^ p2:
                return False
    return True


def random_orthogonal(f: QuadraticForm, seed: int, length: int) -> OrthogonalMap:
    """Product of `length` transvections along seeded uniform g=1 vectors."""
    _require_nondegenerate(f)
    rng = random.Random(seed)
    dim = f.dim
    m = BitMatrix.identity(dim)
    for _ in range(length):
        if dim == 0:
            raise ValueError("the zero-dimensional form has no g=1 vectors")
        while True:
            v = rng.getrandbits(dim)
            if v and _evaluate_bits(f, v):
                break
        m = multiply(transvection(f, BitVector(dim, v)).matrix, m)
    return OrthogonalMap(f, m)


def orthogonal_group_order(dim: int, arf_value: int) -> int:
    """Order of the orthogonal group of a non-degenerate form over GF(2).

    Standard product formula: 2 * 2^(m(m-1)) * (2^m -+ 1) * prod (4^i - 1)
    for dim = 2m, with the sign set by the Arf invariant.
    """
    if dim % 2 or dim < 0:
        raise ValueError("dimension must be even and non-negative")
    if dim == 0:
        return 1
    m = dim // 2
    order = 2 * (1 << (m * (m - 1)))
    order *= (1 << m) - 1 if arf_value == 0 else (1 << m) + 1
    for i in range(1, m):
        order *= (1 << (2 * i)) - 1
    return order
