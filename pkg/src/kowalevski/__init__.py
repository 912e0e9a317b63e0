"""Exact verification and Diophantine-search toolkit for quadratic homogeneous
differential equations in three complex variables."""

__version__ = "0.1.0"

from . import exactalg, numcert, vfield, exponents, dioph, diffalg, riccati

__all__ = ["exactalg", "numcert", "vfield", "exponents", "dioph", "diffalg", "riccati"]
