"""Mapping classes of closed orientable surfaces on the homology level.

A mapping class is reduced to the pair (action on H_1 with Z/2
coefficients, orientation bit); an immersed surface is reduced to the
quadratic form it induces on H_1, refining the intersection form.  For a
class h preserving the form of a genus-n surface, the parity of
quadruple points of any regular homotopy from the immersion to its
h-composition equals rank(h* - Id) + (n+1) eps(h) mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BitMatrix, BitVector, multiply, rank
from .orthogroup import canonical_umap, is_orthogonal, transvection_matrix
from .quadform import QuadraticForm, arf, evaluate, standard_form, standard_gram


class NotRegularlyHomotopicError(ValueError):
    """The two immersions compared are not regularly homotopic."""


@dataclass(frozen=True)
class SurfacePinkallForm:
    """Genus plus the induced quadratic form over the intersection Gram."""

    genus: int
    form: QuadraticForm

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if self.form.dim != 2 * self.genus:
            raise ValueError("form dimension must be twice the genus")
        if self.form.gram != standard_gram(self.genus):
            raise ValueError("Gram matrix must be the standard intersection form")

    @classmethod
    def from_g_values(cls, genus: int, g: BitVector | str) -> "SurfacePinkallForm":
        if isinstance(g, str):
            g = BitVector.from_string(g)
        return cls(genus, QuadraticForm(2 * genus, standard_gram(genus), g))

    @classmethod
    def standard(cls, genus: int, arf_value: int) -> "SurfacePinkallForm":
        return cls(genus, standard_form(genus, arf_value))


@dataclass(frozen=True)
class MappingClass:
    """Pair (action on homology, orientation bit).

    The action must preserve the intersection form, i.e. be symplectic;
    whether it preserves a given quadratic refinement is a separate
    question answered by in_orthogonal_mcg.
    """

    action: BitMatrix
    epsilon: int

    def __post_init__(self) -> None:
        if self.epsilon not in (0, 1):
            raise ValueError("epsilon must be 0 or 1")
        m = self.action
        if not m.is_square() or m.rows % 2:
            raise ValueError("action must be square of even dimension")
        gram = standard_gram(m.rows // 2)
        if multiply(multiply(m.transpose(), gram), m) != gram:
            raise ValueError("action must preserve the intersection form")


@dataclass(frozen=True)
class Token:
    """One generator in a mapping-class word."""

    kind: str  # "twist" | "square" | "flip" | "umap"
    vector: BitVector | None = None


def twist(c: BitVector) -> Token:
    return Token("twist", c)


def square(c: BitVector) -> Token:
    return Token("square", c)


FLIP = Token("flip")
UMAP = Token("umap")


def dehn_twist_action(s: SurfacePinkallForm, c: BitVector) -> MappingClass:
    """Homology action of a Dehn twist along a class c: the transvection by c.

    Defined for every c; it preserves the surface's quadratic form only
    when g(c) = 1 or c = 0.
    """
    if c.length != 2 * s.genus:
        raise ValueError("length mismatch")
    return MappingClass(transvection_matrix(s.form, c), 0)


def good_map_type(s: SurfacePinkallForm, token: Token) -> int | None:
    """Classify a twist-like token: 1 squared twist, 2 twist with g = 1,
    3 twist along a null class; None when the twist is not form-preserving."""
    if token.kind == "square":
        return 1
    if token.kind != "twist":
        raise ValueError(f"not a twist token: {token.kind}")
    c = token.vector
    assert c is not None
    if evaluate(s.form, c) == 1:
        return 2
    if c.is_zero():
        return 3
    return None


def evaluate_word(s: SurfacePinkallForm, word) -> MappingClass:
    """Left-to-right product of token actions; epsilon counts the flips.

    Squared twists act trivially on homology; the swap token is only
    admitted on genus 2 with Arf invariant 0 and contributes the canonical
    involution with epsilon 0.
    """
    dim = 2 * s.genus
    action = BitMatrix.identity(dim)
    eps = 0
    for token in word:
        if token.kind in ("twist", "square"):
            c = token.vector
            if c is None or c.length != dim:
                raise ValueError(f"{token.kind} vector must have length {dim}")
            if token.kind == "twist":
                action = multiply(transvection_matrix(s.form, c), action)
        elif token.kind == "flip":
            eps ^= 1
        elif token.kind == "umap":
            if s.genus != 2 or arf(s.form) != 0:
                raise ValueError("the swap token requires genus 2 with Arf 0")
            action = multiply(canonical_umap(s.form).matrix, action)
        else:
            raise ValueError(f"unknown token kind: {token.kind}")
    return MappingClass(action, eps)


def in_orthogonal_mcg(s: SurfacePinkallForm, h: MappingClass) -> bool:
    """Whether the class preserves the surface's quadratic form."""
    return is_orthogonal(s.form, h.action)


def mapping_class_parity(s: SurfacePinkallForm, h: MappingClass) -> int:
    """rank(h* - Id) + (genus + 1) eps(h), mod 2."""
    if h.action.rows != 2 * s.genus:
        raise ValueError("dimension mismatch")
    if not in_orthogonal_mcg(s, h):
        raise ValueError("mapping class does not preserve the form")
    r = rank(h.action ^ BitMatrix.identity(h.action.rows))
    return (r + (s.genus + 1) * h.epsilon) & 1


def quadruple_point_invariant(s: SurfacePinkallForm, h: MappingClass) -> int:
    """Parity of quadruple points between the immersion and its h-composition.

    Defined only when the two are regularly homotopic, i.e. when h
    preserves the induced form.
    """
    if h.action.rows != 2 * s.genus:
        raise ValueError("dimension mismatch")
    if not in_orthogonal_mcg(s, h):
        raise NotRegularlyHomotopicError(
            "not regularly homotopic: the class does not preserve the induced form")
    return mapping_class_parity(s, h)


def regularly_homotopic(s1: SurfacePinkallForm, s2: SurfacePinkallForm) -> bool:
    """Immersions are regularly homotopic iff they induce the same form."""
    if s1.genus != s2.genus:
        raise ValueError("genus mismatch")
    return s1.form.basis_g == s2.form.basis_g


def equivalent_up_to_diffeomorphism(s1: SurfacePinkallForm, s2: SurfacePinkallForm) -> bool:
    """Equivalence after composing with some diffeomorphism: equal Arf."""
    if s1.genus != s2.genus:
        raise ValueError("genus mismatch")
    return arf(s1.form) == arf(s2.form)


def embedding_realizable(s: SurfacePinkallForm) -> bool:
    """Whether an embedding induces this form: Arf invariant 0."""
    return arf(s.form) == 0


GENUS1_GENERATORS: dict[int, tuple[tuple[str, tuple[tuple[int, int], tuple[int, int]]], ...]] = {
    0: (
        ("A1", ((1, 2), (0, 1))),
        ("A2", ((1, 0), (2, 1))),
        ("A3", ((-1, 0), (0, 1))),
        ("A4", ((0, 1), (1, 0))),
    ),
    1: (
        ("B1", ((-1, 2), (0, 1))),
        ("B2", ((0, 1), (1, 0))),
    ),
}


def _reduce_integer_class(entries: tuple[tuple[int, int], tuple[int, int]]) -> MappingClass:
    (a, b), (c, d) = entries
    action = BitMatrix(2, 2, ((a & 1) | ((b & 1) << 1), (c & 1) | ((d & 1) << 1)))
    det = a * d - b * c
    return MappingClass(action, 0 if det > 0 else 1)


def genus1_generators(arf_value: int) -> list[MappingClass]:
    """Mod-2 reductions of the torus generator matrices, with orientation
    bits from the sign of the integer determinant."""
    if arf_value not in (0, 1):
        raise ValueError("arf_value must be 0 or 1")
    return [_reduce_integer_class(entries) for _, entries in GENUS1_GENERATORS[arf_value]]


def connected_sum(h1: MappingClass, h2: MappingClass) -> MappingClass:
    """Block-diagonal join of two classes with matching orientation bits."""
    if h1.epsilon != h2.epsilon:
        raise ValueError("epsilon mismatch")
    d1 = h1.action.rows
    d2 = h2.action.rows
    rows = tuple(h1.action.data) + tuple(r << d1 for r in h2.action.data)
    return MappingClass(BitMatrix(d1 + d2, d1 + d2, rows), h1.epsilon)
