"""Differential-algebra verification layer."""

from .context import DerivationContext, Frac, weierstrass_context, jacobi_sn_context, jet_context
from .checks import (
    VerifyReport, NotProportionalToEuler, NotAFunctionOfXi, DimensionMismatch,
    NotSymmetric, NoSuchConstants,
    apply_field, verify_first_integral, find_polynomial_first_integrals,
    find_commuting_fields, verify_halphen_type, projective_invariant,
    triangle_invariant, verify_pushforward, verify_solution_map,
    verify_birational_inverse, verify_equivariance, cyclotomic,
    symmetric_chazy_quotient, verify_ode_solution,
)
from .blowup import (
    FoliationForm, WrongResonance, chart_form, blow_up_once, blowup_obstruction,
    resonance_coefficient, factor_against,
)
from . import models
from .ledger import run_ledger, claim_tags, ClaimResult

__all__ = [
    "DerivationContext", "Frac", "weierstrass_context", "jacobi_sn_context", "jet_context",
    "VerifyReport", "NotProportionalToEuler", "NotAFunctionOfXi", "DimensionMismatch",
    "NotSymmetric", "NoSuchConstants",
    "apply_field", "verify_first_integral", "find_polynomial_first_integrals",
    "find_commuting_fields", "verify_halphen_type", "projective_invariant",
    "triangle_invariant", "verify_pushforward", "verify_solution_map",
    "verify_birational_inverse", "verify_equivariance", "cyclotomic",
    "symmetric_chazy_quotient", "verify_ode_solution",
    "FoliationForm", "WrongResonance", "chart_form", "blow_up_once",
    "blowup_obstruction", "resonance_coefficient", "factor_against",
    "models", "run_ledger", "claim_tags", "ClaimResult",
]
