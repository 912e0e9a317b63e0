"""Exact scalar, polynomial, rational-function and linear algebra layer."""

from .field import FieldElem, MixedRadicands, DivisionByZero, squarefree_decompose, ZERO, ONE
from .poly import (
    MPoly,
    RatFunc,
    InexactDivision,
    VarAbsent,
    exact_divide,
    divides,
    mpoly_gcd,
    poly_ring,
    poly_substitute,
    resultant,
)
from .matrix import SqMatrix, SingularMatrix, char_poly, nullspace_exact
from .linsolve import nullspace_field

__all__ = [
    "FieldElem", "MixedRadicands", "DivisionByZero", "squarefree_decompose", "ZERO", "ONE",
    "MPoly", "RatFunc", "InexactDivision", "VarAbsent", "exact_divide", "divides",
    "mpoly_gcd", "poly_ring", "poly_substitute", "resultant",
    "SqMatrix", "SingularMatrix", "char_poly", "nullspace_exact", "nullspace_field",
]
