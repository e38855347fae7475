"""Quadratic forms over GF(2) and the quadruple-point parity of surface
mapping classes, with a constructive transvection calculus in between."""

from .gf2 import BitMatrix, BitVector, kernel_basis, multiply, rank, solve
from .mcg import (
    MappingClass,
    NotRegularlyHomotopicError,
    SurfacePinkallForm,
    quadruple_point_invariant,
)
from .orthogroup import OrthogonalMap, decompose, rank_parity, transvection
from .quadform import QuadraticForm, arf, standard_form

__all__ = [
    "BitMatrix",
    "BitVector",
    "MappingClass",
    "NotRegularlyHomotopicError",
    "OrthogonalMap",
    "QuadraticForm",
    "SurfacePinkallForm",
    "arf",
    "decompose",
    "kernel_basis",
    "multiply",
    "quadruple_point_invariant",
    "rank",
    "rank_parity",
    "solve",
    "standard_form",
    "transvection",
]

__version__ = "0.1.0"
