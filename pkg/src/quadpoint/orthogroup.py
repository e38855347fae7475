"""The orthogonal group of a quadratic form over GF(2).

Membership testing, transvections T_a(x) = x + B(x,a) a, fixed spaces,
the rank-parity homomorphism T -> rank(T - Id) mod 2, and a constructive
decomposition of any orthogonal map into a word of transvections -- plus
one extra involution in the single exceptional case (dimension 4, Arf 0)
where transvections generate only an index-2 subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import guards
from .gf2 import (
    BitMatrix,
    BitVector,
    inverse,
    kernel_basis,
    multiply,
    rank,
    rank_rows,
    solve,
)
from .quadform import (
    QuadraticForm,
    _bil_bits,
    _evaluate_bits,
    _gram_bits,
    arf,
    evaluate,
    find_connector,
    is_nondegenerate,
    symplectic_basis,
)


def transvection_matrix(f: QuadraticForm, a: BitVector) -> BitMatrix:
    """Matrix of x -> x + B(x,a) a; orthogonal only when g(a) = 1 or a = 0."""
    if a.length != f.dim:
        raise ValueError("length mismatch")
    w = _gram_bits(f, a.bits)
    rows = tuple((1 << i) ^ (w if (a.bits >> i) & 1 else 0) for i in range(f.dim))
    return BitMatrix(f.dim, f.dim, rows)


def _columns(data: Sequence[int], dim: int) -> list[int]:
    cols = [0] * dim
    for i, row in enumerate(data):
        t = row
        while t:
            low = t & -t
            cols[low.bit_length() - 1] |= 1 << i
            t ^= low
    return cols


def _is_orthogonal_data(f: QuadraticForm, data: Sequence[int]) -> bool:
    dim = f.dim
    if rank_rows(data) != dim:
        return False
    cols = _columns(data, dim)
    gbits = f.basis_g.bits
    for i in range(dim):
        if _evaluate_bits(f, cols[i]) != (gbits >> i) & 1:
            return False
    gram = f.gram.data
    for i in range(dim):
        for j in range(i + 1, dim):
            if _bil_bits(f, cols[i], cols[j]) != (gram[i] >> j) & 1:
                return False
    return True


def is_orthogonal(f: QuadraticForm, m: BitMatrix) -> bool:
    """Whether m is invertible and preserves g.

    Checking g on basis vectors and B on basis pairs is equivalent to
    checking g everywhere, by polarization.
    """
    if not m.is_square() or m.rows != f.dim:
        raise ValueError("dimension mismatch")
    return _is_orthogonal_data(f, m.data)


@dataclass(frozen=True)
class OrthogonalMap:
    """An invertible matrix certified at construction to preserve its form."""

    form: QuadraticForm
    matrix: BitMatrix

    def __post_init__(self) -> None:
        if not is_orthogonal(self.form, self.matrix):
            raise ValueError("matrix does not preserve the quadratic form")

    def apply(self, v: BitVector) -> BitVector:
        return self.matrix.apply(v)


def transvection(f: QuadraticForm, a: BitVector) -> OrthogonalMap:
    """The transvection along a; requires g(a) = 1 or a = 0."""
    if not a.is_zero() and evaluate(f, a) != 1:
        raise ValueError("transvection vector must satisfy g(a) = 1 or a = 0")
    return OrthogonalMap(f, transvection_matrix(f, a))


def rank_parity(t: OrthogonalMap | BitMatrix) -> int:
    """rank(T - Id) mod 2.

    A homomorphism to Z/2 on any orthogonal group; well defined (but not
    in general a homomorphism) on arbitrary square matrices.
    """
    m = t.matrix if isinstance(t, OrthogonalMap) else t
    if not m.is_square():
        raise ValueError("square matrix required")
    return rank(m ^ BitMatrix.identity(m.rows)) & 1


def fixed_space(t: OrthogonalMap) -> list[BitVector]:
    """Basis of the fixed space ker(T - Id)."""
    return kernel_basis(t.matrix ^ BitMatrix.identity(t.matrix.rows))


# -- the exceptional dimension-4, Arf-0 geometry ----------------------------

@dataclass(frozen=True)
class UMapPartition:
    """The canonical split of the six g=1 vectors into two triples.

    B = 1 between distinct vectors of the same triple, B = 0 across;
    v1 is the triple containing the lexicographically least vector.
    """

    v1: frozenset[BitVector]
    v2: frozenset[BitVector]


@lru_cache(maxsize=None)
def umap_partition(f: QuadraticForm) -> UMapPartition:
    if f.dim != 4:
        raise ValueError("the partition exists only in dimension 4")
    if not is_nondegenerate(f) or arf(f) != 0:
        raise ValueError("the partition exists only for Arf invariant 0")
    ones = [BitVector(4, v) for v in range(1, 16) if _evaluate_bits(f, v)]
    ones.sort(key=BitVector.to01)
    first = ones[0]
    part1 = frozenset(v for v in ones if v == first or _bil_bits(f, first.bits, v.bits))
    part2 = frozenset(v for v in ones if v not in part1)
    return UMapPartition(part1, part2)


def is_u_map(t: OrthogonalMap) -> bool:
    """Whether t swaps the two triples of the dimension-4 Arf-0 partition."""
    part = umap_partition(t.form)
    probe = min(part.v1, key=BitVector.to01)
    return t.apply(probe) in part.v2


@lru_cache(maxsize=None)
def canonical_umap(f: QuadraticForm) -> OrthogonalMap:
    """The canonical involutive swap of the two partition triples.

    Matches the triples in lexicographic order: with u1 < u2 spanning one
    triple and v1 < v2 the other, the map exchanges u_i and v_i.  Its
    square is the identity, so its rank parity is 0.
    """
    part = umap_partition(f)
    s1 = sorted(part.v1, key=BitVector.to01)
    s2 = sorted(part.v2, key=BitVector.to01)
    change = BitMatrix.from_rows([s1[0], s1[1], s2[0], s2[1]]).transpose()
    swap = BitMatrix.from_strings(["0010", "0001", "1000", "0100"])
    u0 = multiply(multiply(change, swap), inverse(change))
    return OrthogonalMap(f, u0)


# -- decomposition into generators ------------------------------------------

def _matvec(rows: Sequence[int], vbits: int) -> int:
    out = 0
    for i, r in enumerate(rows):
        if (r & vbits).bit_count() & 1:
            out |= 1 << i
    return out


def _normalized_pairs(f: QuadraticForm) -> tuple[list[int], list[int]]:
    """Symplectic basis adjusted so that every a_i has g = 1.

    If g(a) = 0 but g(b) = 1 the pair is swapped; if both vanish, a+b has
    g = 1 and (a+b, b) is again a hyperbolic pair.
    """
    sb = symplectic_basis(f)
    a_bits, b_bits = [], []
    for a, b in zip(sb.a_vectors, sb.b_vectors):
        ab, bb = a.bits, b.bits
        if not _evaluate_bits(f, ab):
            if _evaluate_bits(f, bb):
                ab, bb = bb, ab
            else:
                ab ^= bb
        a_bits.append(ab)
        b_bits.append(bb)
    return a_bits, b_bits


def _restoration_word(f: QuadraticForm, m: BitMatrix) -> list[BitVector]:
    """Transvection word carrying m back to the identity.

    Phase one returns each basis vector a_i to place with at most two
    transvections orthogonal to the already-restored a's (via a connector
    when B(image, target) = 0).  Phase two then fixes each b_j; at that
    point the needed correction lies in the isotropic span of a_j..a_n and
    splits into one or two transvections there.  The returned word is in
    application order: composing its transvections, first entry first,
    reproduces m.
    """
    dim = f.dim
    n = dim // 2
    a_bits, b_bits = _normalized_pairs(f)
    cur = list(m.data)
    applied: list[int] = []

    def push(cbits: int) -> None:
        w = _gram_bits(f, cbits)
        acc = 0
        t = w
        while t:
            low = t & -t
            acc ^= cur[low.bit_length() - 1]
            t ^= low
        for i in range(dim):
            if (cbits >> i) & 1:
                cur[i] ^= acc
        applied.append(cbits)

    for k in range(n):
        target = a_bits[k]
        image = _matvec(cur, target)
        if image == target:
            continue
        if _bil_bits(f, image, target):
            push(image ^ target)
            continue
        z = find_connector(
            f,
            [BitVector(dim, a_bits[i]) for i in range(k)],
            BitVector(dim, image),
            BitVector(dim, target),
        ).bits
        push(image ^ z)
        push(z ^ target)

    for j in range(n):
        target = b_bits[j]
        delta = _matvec(cur, target) ^ target
        if delta == 0:
            continue
        span = a_bits[j:]
        rows = []
        for i in range(dim):
            r = 0
            for t, c in enumerate(span):
                r |= ((c >> i) & 1) << t
            rows.append(r)
        coeffs = solve(BitMatrix(dim, len(span), tuple(rows)), BitVector(dim, delta))
        if coeffs is None:
            raise ValueError("restoration failed: correction outside expected span")
        if coeffs.bits & 1:
            push(delta)
        else:
            push(delta ^ a_bits[j])
            push(a_bits[j])

    if cur != [1 << i for i in range(dim)]:
        raise ValueError("restoration failed to reach the identity")
    return [BitVector(dim, c) for c in reversed(applied)]


def _bfs_word(f: QuadraticForm, m: BitMatrix) -> list[BitVector]:
    """Shortest transvection word for m by breadth-first search (small dims)."""
    dim = f.dim
    gens = [(v, transvection_matrix(f, BitVector(dim, v)).data)
            for v in range(1, 1 << dim) if _evaluate_bits(f, v)]
    identity = tuple(1 << i for i in range(dim))
    target = tuple(m.data)
    seen: dict[tuple[int, ...], list[int]] = {identity: []}
    frontier = [identity]
    while frontier and target not in seen:
        nxt = []
        for state in frontier:
            word = seen[state]
            for vbits, gdata in gens:
                prod = tuple(_matvec_rows(gdata, state))
                if prod not in seen:
                    seen[prod] = word + [vbits]
                    nxt.append(prod)
        frontier = nxt
    if target not in seen:
        raise ValueError("matrix is not a product of transvections")
    return [BitVector(dim, c) for c in seen[target]]


def _matvec_rows(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = []
    for ra in a:
        acc = 0
        t = ra
        while t:
            low = t & -t
            acc ^= b[low.bit_length() - 1]
            t ^= low
        out.append(acc)
    return out


def decompose(t: OrthogonalMap) -> tuple[int, list[BitVector]]:
    """Factor t as (optional canonical swap, then a transvection word).

    Returns (u_flag, word): applying the canonical dimension-4 Arf-0 swap
    first (when u_flag is 1) and then the word's transvections in list
    order reproduces t.  Every word vector c has g(c) = 1, and the word
    length is congruent to rank(t - Id) mod 2.
    """
    f = t.form
    dim = f.dim
    if dim == 0:
        return 0, []
    u_flag = 0
    work = t.matrix
    if dim == 4 and is_nondegenerate(f) and arf(f) == 0 and is_u_map(t):
        u_flag = 1
        work = multiply(work, canonical_umap(f).matrix)
    try:
        word = _restoration_word(f, work)
    except ValueError:
        if dim > 4:
            raise
        word = _bfs_word(f, work)
    return u_flag, word


def recompose(f: QuadraticForm, u_flag: int, word: Iterable[BitVector]) -> BitMatrix:
    """Product of the decomposition: swap first (if flagged), then the word."""
    m = BitMatrix.identity(f.dim)
    if u_flag:
        m = canonical_umap(f).matrix
    for c in word:
        if not c.is_zero() and evaluate(f, c) != 1:
            raise ValueError("word vector must satisfy g(c) = 1 or c = 0")
        m = multiply(transvection_matrix(f, c), m)
    return m


def enumerate_group(f: QuadraticForm, include_umap: bool = True) -> set[BitMatrix]:
    """Closure of all transvections (plus the canonical swap when it exists).

    All generators are involutions, so the multiplicative closure from the
    identity is the full generated group.
    """
    dim = f.dim
    guards.check_dim(dim, 8, "group enumeration")
    identity = tuple(1 << i for i in range(dim))
    tgens = []
    for v in range(1, 1 << dim):
        if _evaluate_bits(f, v):
            tgens.append((v, _gram_bits(f, v)))
    u0 = None
    if include_umap and dim == 4 and is_nondegenerate(f) and arf(f) == 0:
        u0 = canonical_umap(f).matrix.data
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for state in frontier:
            for abits, wbits in tgens:
                acc = 0
                t = wbits
                while t:
                    low = t & -t
                    acc ^= state[low.bit_length() - 1]
                    t ^= low
                prod = tuple(
                    (row ^ acc) if (abits >> i) & 1 else row
                    for i, row in enumerate(state)
                )
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
            if u0 is not None:
                prod = tuple(_matvec_rows(u0, state))
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return {BitMatrix(dim, dim, data) for data in seen}
