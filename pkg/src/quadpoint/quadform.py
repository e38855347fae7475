"""Quadratic forms over GF(2).

A quadratic form g satisfies g(x+y) = g(x) + g(y) + B(x,y) for a
symmetric bilinear form B with zero diagonal, so g is determined by its
Gram matrix and its values on basis vectors, and is evaluated by
polarization.  Non-degenerate forms live on even-dimensional spaces,
admit symplectic bases, and fall into exactly two isomorphism classes
per dimension, separated by the Arf invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .gf2 import BitMatrix, BitVector, kernel_basis, parity, rank, rank_rows, solve


@dataclass(frozen=True)
class QuadraticForm:
    """A quadratic form given by its Gram matrix and basis values.

    gram[i][j] = B(e_i, e_j) must be symmetric with zero diagonal;
    basis_g[i] = g(e_i).
    """

    dim: int
    gram: BitMatrix
    basis_g: BitVector

    def __post_init__(self) -> None:
        if self.gram.rows != self.dim or self.gram.cols != self.dim:
            raise ValueError("Gram matrix does not match the dimension")
        if self.basis_g.length != self.dim:
            raise ValueError("basis value vector does not match the dimension")
        for i, row in enumerate(self.gram.data):
            if (row >> i) & 1:
                raise ValueError(f"Gram diagonal must vanish (row {i})")
        if self.gram.data != self.gram.transpose().data:
            raise ValueError("Gram matrix must be symmetric")

    def g(self, v: BitVector) -> int:
        return evaluate(self, v)

    def b(self, x: BitVector, y: BitVector) -> int:
        return bilinear(self, x, y)


@dataclass(frozen=True)
class SymplecticBasis:
    """Basis pairs with B(a_i,a_j) = B(b_i,b_j) = 0 and B(a_i,b_j) = delta_ij."""

    a_vectors: tuple[BitVector, ...]
    b_vectors: tuple[BitVector, ...]


# -- bit-level helpers shared inside the package ---------------------------

def _evaluate_bits(f: QuadraticForm, vbits: int) -> int:
    acc = parity(vbits & f.basis_g.bits)
    rest = vbits
    gram = f.gram.data
    while rest:
        i = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        acc ^= parity(gram[i] & rest)
    return acc


def _bil_bits(f: QuadraticForm, xbits: int, ybits: int) -> int:
    acc = 0
    gram = f.gram.data
    t = xbits
    while t:
        i = (t & -t).bit_length() - 1
        t &= t - 1
        acc ^= parity(gram[i] & ybits)
    return acc


def _gram_bits(f: QuadraticForm, vbits: int) -> int:
    """Packed image of v under the Gram matrix: bit j = B(e_j, v)."""
    out = 0
    for j, row in enumerate(f.gram.data):
        if (row & vbits).bit_count() & 1:
            out |= 1 << j
    return out


# -- evaluation -------------------------------------------------------------

def evaluate(f: QuadraticForm, v: BitVector) -> int:
    """g(v), expanded over the basis by polarization."""
    if v.length != f.dim:
        raise ValueError("length mismatch")
    return _evaluate_bits(f, v.bits)


def bilinear(f: QuadraticForm, x: BitVector, y: BitVector) -> int:
    """B(x, y) = x^T . gram . y."""
    if x.length != f.dim or y.length != f.dim:
        raise ValueError("length mismatch")
    return _bil_bits(f, x.bits, y.bits)


@lru_cache(maxsize=None)
def is_nondegenerate(f: QuadraticForm) -> bool:
    return rank(f.gram) == f.dim


def _require_nondegenerate(f: QuadraticForm) -> None:
    if not is_nondegenerate(f):
        raise ValueError("degenerate form")


# -- structure --------------------------------------------------------------

@lru_cache(maxsize=None)
def symplectic_basis(f: QuadraticForm) -> SymplecticBasis:
    """A symplectic basis, produced by a deterministic greedy reduction.

    Repeatedly takes the first remaining vector x, the first partner y
    with B(x,y) = 1, and replaces the rest by their projections to the
    orthogonal complement of the pair.
    """
    _require_nondegenerate(f)
    remaining = [1 << i for i in range(f.dim)]
    a_out: list[BitVector] = []
    b_out: list[BitVector] = []
    while remaining:
        x = remaining[0]
        y = next(z for z in remaining[1:] if _bil_bits(f, x, z))
        a_out.append(BitVector(f.dim, x))
        b_out.append(BitVector(f.dim, y))
        projected = []
        pivots: dict[int, int] = {}
        for z in remaining:
            if z in (x, y):
                continue
            if _bil_bits(f, z, y):
                z ^= x
            if _bil_bits(f, z, x):
                z ^= y
            t = z
            while t:
                low = t & -t
                p = pivots.get(low)
                if p is None:
                    pivots[low] = t
                    projected.append(z)
                    break
                t ^= p
        remaining = projected
    return SymplecticBasis(tuple(a_out), tuple(b_out))


def complete_isotropic(f: QuadraticForm, a_vectors: Sequence[BitVector]) -> list[BitVector]:
    """Dual partners of an independent isotropic family.

    Given independent a_1..a_k with B(a_i,a_j) = 0, returns b_1..b_k with
    B(b_i,b_j) = 0 and B(a_i,b_j) = delta_ij.
    """
    _require_nondegenerate(f)
    k = len(a_vectors)
    for i in range(k):
        if a_vectors[i].length != f.dim:
            raise ValueError("length mismatch")
        for j in range(i, k):
            if bilinear(f, a_vectors[i], a_vectors[j]):
                raise ValueError(f"vectors {i} and {j} are not orthogonal")
    if rank_rows(v.bits for v in a_vectors) != k:
        raise ValueError("vectors are not independent")
    dual_rows = BitMatrix(k, f.dim, tuple(_gram_bits(f, v.bits) for v in a_vectors))
    cs = []
    for j in range(k):
        c = solve(dual_rows, BitVector.basis(k, j))
        assert c is not None  # solvable: independent rows of an invertible Gram
        cs.append(c.bits)
    out = []
    for i in range(k):
        b = cs[i]
        for m in range(i + 1, k):
            if _bil_bits(f, cs[i], cs[m]):
                b ^= a_vectors[m].bits
        out.append(BitVector(f.dim, b))
    return out


@lru_cache(maxsize=None)
def arf(f: QuadraticForm) -> int:
    """Arf invariant: sum of g(a_i) g(b_i) over a symplectic basis."""
    sb = symplectic_basis(f)
    acc = 0
    for a, b in zip(sb.a_vectors, sb.b_vectors):
        acc ^= _evaluate_bits(f, a.bits) & _evaluate_bits(f, b.bits)
    return acc


def direct_sum(f1: QuadraticForm, f2: QuadraticForm) -> QuadraticForm:
    """Orthogonal direct sum: block-diagonal Gram, concatenated g-values."""
    d1, d2 = f1.dim, f2.dim
    rows = tuple(f1.gram.data) + tuple(r << d1 for r in f2.gram.data)
    return QuadraticForm(
        d1 + d2,
        BitMatrix(d1 + d2, d1 + d2, rows),
        BitVector(d1 + d2, f1.basis_g.bits | (f2.basis_g.bits << d1)),
    )


def pullback(f: QuadraticForm, p: BitMatrix) -> QuadraticForm:
    """The form x -> g(p x): Gram becomes p^T gram p, basis values g(p e_i)."""
    if p.rows != f.dim or p.cols != f.dim:
        raise ValueError("change of basis must be square of matching dimension")
    cols = [p.column(j).bits for j in range(f.dim)]
    rows = []
    for i in range(f.dim):
        r = 0
        for j in range(f.dim):
            r |= _bil_bits(f, cols[i], cols[j]) << j
        rows.append(r)
    gbits = 0
    for i in range(f.dim):
        gbits |= _evaluate_bits(f, cols[i]) << i
    return QuadraticForm(f.dim, BitMatrix(f.dim, f.dim, tuple(rows)),
                         BitVector(f.dim, gbits))


def standard_gram(genus: int) -> BitMatrix:
    """Block-diagonal hyperbolic Gram on basis a_1,b_1,...,a_n,b_n."""
    rows = []
    for i in range(genus):
        rows.append(1 << (2 * i + 1))
        rows.append(1 << (2 * i))
    return BitMatrix(2 * genus, 2 * genus, tuple(rows))


def standard_form(genus: int, arf_value: int) -> QuadraticForm:
    """The standard non-degenerate form of given genus and Arf invariant."""
    gbits = 0b11 if (arf_value and genus) else 0
    if arf_value and not genus:
        raise ValueError("genus 0 only carries the trivial form")
    return QuadraticForm(2 * genus, standard_gram(genus), BitVector(2 * genus, gbits))


# -- searches ---------------------------------------------------------------

def _in_span(vectors: Sequence[BitVector], v: BitVector) -> bool:
    base = [w.bits for w in vectors]
    return rank_rows(base) == rank_rows(base + [v.bits])


def _find_flip(f: QuadraticForm, base: int, space_basis: Sequence[int]) -> int | None:
    """Element k of the span with g(k) + B(base, k) = 1.

    h(k) = g(k) + B(base,k) is itself quadratic with the same bilinear
    part, so if every basis vector has h = 0 a witness, when one exists,
    is a pair with B = 1.
    """
    for k in space_basis:
        if _evaluate_bits(f, k) ^ _bil_bits(f, base, k):
            return k
    for i in range(len(space_basis)):
        for j in range(i + 1, len(space_basis)):
            if _bil_bits(f, space_basis[i], space_basis[j]):
                return space_basis[i] ^ space_basis[j]
    return None


def find_connector(f: QuadraticForm, ws: Sequence[BitVector],
                   a1: BitVector, a2: BitVector) -> BitVector:
    """A vector c orthogonal to all w_i with g(c) = 1, B(a1,c) = B(a2,c) = 1.

    The w_i must be independent with g(w_i) = 1 and pairwise B = 0; a1 and
    a2 must lie in the orthogonal complement of W = span(w_i) but outside W,
    with g = 1 and B(a1,a2) = 0.  No such c exists in dimension 2 with
    Arf 0, nor in dimension 4 with Arf 0 when k = 0 and a1 != a2; those
    requests are rejected.
    """
    _require_nondegenerate(f)
    dim = f.dim
    k = len(ws)
    for i, w in enumerate(ws):
        if w.length != dim:
            raise ValueError("length mismatch")
        if evaluate(f, w) != 1:
            raise ValueError(f"w[{i}] must have g = 1")
        for j in range(i, k):
            if bilinear(f, w, ws[j]):
                raise ValueError(f"w[{i}] and w[{j}] must be orthogonal")
    if rank_rows(w.bits for w in ws) != k:
        raise ValueError("w vectors must be independent")
    for name, a in (("a1", a1), ("a2", a2)):
        if a.length != dim:
            raise ValueError("length mismatch")
        if evaluate(f, a) != 1:
            raise ValueError(f"{name} must have g = 1")
        for i, w in enumerate(ws):
            if bilinear(f, a, w):
                raise ValueError(f"{name} must be orthogonal to w[{i}]")
        if _in_span(ws, a):
            raise ValueError(f"{name} must lie outside the span of the w vectors")
    if bilinear(f, a1, a2):
        raise ValueError("a1 and a2 must be orthogonal")

    arf_value = arf(f)
    if (dim, arf_value) == (2, 0):
        raise ValueError("no connector exists: dimension 2 with Arf 0 is excluded")
    if (dim, arf_value) == (4, 0) and k == 0 and a1 != a2:
        raise ValueError(
            "no connector exists: dimension 4 with Arf 0 requires k > 0 or a1 = a2")

    if k > 0:
        rows = [_gram_bits(f, w.bits) for w in ws]
        rhs = 0
        rows.append(_gram_bits(f, a1.bits))
        rhs |= 1 << (len(rows) - 1)
        if a2 != a1:
            rows.append(_gram_bits(f, a2.bits))
            rhs |= 1 << (len(rows) - 1)
        b = solve(BitMatrix(len(rows), dim, tuple(rows)), BitVector(len(rows), rhs))
        assert b is not None  # a1, a2 outside W makes the system consistent
        cbits = b.bits if _evaluate_bits(f, b.bits) else b.bits ^ ws[0].bits
        return BitVector(dim, cbits)

    if a1 == a2:
        row = _gram_bits(f, a1.bits)
        b = solve(BitMatrix(1, dim, (row,)), BitVector(1, 1))
        assert b is not None
        if _evaluate_bits(f, b.bits):
            return b
        u_vectors = [a1.bits, b.bits]
        base = b.bits
    else:
        b1, b2 = complete_isotropic(f, [a1, a2])
        base = b1.bits ^ b2.bits
        if _evaluate_bits(f, base):
            return BitVector(dim, base)
        u_vectors = [a1.bits, a2.bits, b1.bits, b2.bits]
    perp_rows = BitMatrix(len(u_vectors), dim,
                          tuple(_gram_bits(f, u) for u in u_vectors))
    perp = [v.bits for v in kernel_basis(perp_rows)]
    d = _find_flip(f, 0, perp)
    if d is None:
        raise ValueError("no connector exists for the given configuration")
    return BitVector(dim, base ^ d)


def find_transvection_path(f: QuadraticForm, x: BitVector, y: BitVector) -> list[BitVector]:
    """Vectors c_1(, c_2) with g(c_i) = 1 whose transvections carry x to y.

    Requires x, y nonzero, distinct, with g(x) = g(y).  When B(x,y) = 1 a
    single step x+y suffices; otherwise the path goes through a z with
    B(x,z) = B(y,z) = 1 and g(z) = g(x), found by solving the two linear
    conditions and flipping into the right g-class along their kernel.
    """
    _require_nondegenerate(f)
    if x.length != f.dim or y.length != f.dim:
        raise ValueError("length mismatch")
    if x.is_zero() or y.is_zero():
        raise ValueError("x and y must be nonzero")
    if x == y:
        raise ValueError("x and y must be distinct")
    if evaluate(f, x) != evaluate(f, y):
        raise ValueError("x and y must have equal g-value")
    if bilinear(f, x, y):
        return [x ^ y]
    system = BitMatrix(2, f.dim, (_gram_bits(f, x.bits), _gram_bits(f, y.bits)))
    z0 = solve(system, BitVector(2, 0b11))
    assert z0 is not None  # distinct nonzero x, y give independent rows
    zbits = z0.bits
    if _evaluate_bits(f, zbits) != evaluate(f, x):
        flip = _find_flip(f, zbits, [v.bits for v in kernel_basis(system)])
        if flip is None:
            raise ValueError("no transvection path exists between the given vectors")
        zbits ^= flip
    return [BitVector(f.dim, x.bits ^ zbits), BitVector(f.dim, zbits ^ y.bits)]
