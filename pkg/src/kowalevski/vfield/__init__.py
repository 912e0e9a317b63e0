"""Vector fields on C^3 and the named equation catalog."""

from .fields import (
    PolyVF,
    QuadVF,
    ContextMismatch,
    lie_bracket,
    linear_change,
    euler_field,
    weight_field,
    QUAD_BASIS,
)
from .catalog import (
    CATALOG_IDS,
    ROMAN,
    CatalogEntry,
    DegenerateParameters,
    UnknownEquation,
    catalog_entry,
    make_equation,
    expected_profile,
    sufficient_univalence,
    eq_ii_beta,
    eq_vi_beta,
    eq_vii_beta,
    eq_xi_beta,
    eq_xii_beta,
    eq_xiii_beta,
    twonegative_alpha,
    chazy_xii_coefficient,
    chazy_xii_scaled_symbolic,
)

__all__ = [
    "PolyVF", "QuadVF", "ContextMismatch", "lie_bracket", "linear_change",
    "euler_field", "weight_field", "QUAD_BASIS",
    "CATALOG_IDS", "ROMAN", "CatalogEntry", "DegenerateParameters", "UnknownEquation",
    "catalog_entry", "make_equation", "expected_profile", "sufficient_univalence",
    "eq_ii_beta", "eq_vi_beta", "eq_vii_beta", "eq_xi_beta", "eq_xii_beta", "eq_xiii_beta",
    "twonegative_alpha", "chazy_xii_coefficient", "chazy_xii_scaled_symbolic",
]
