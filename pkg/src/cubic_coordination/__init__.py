"""Exact coordination, Delannoy and Schroder numbers of the cubic lattices.

The package builds the number families through Riordan-array algebra over
the rationals and ships executable checks for their positivity, zero,
normality and Hankel properties on finite windows.
"""

from . import analytics, lattice, positivity, riordan, zeros
from .errors import CoordinationError
from .exact import ExactMatrix, ExactPolynomial, RationalInterval, TruncatedSeries
from .riordan import RiordanArray

__all__ = [
    "CoordinationError",
    "ExactMatrix",
    "ExactPolynomial",
    "RationalInterval",
    "RiordanArray",
    "TruncatedSeries",
    "analytics",
    "lattice",
    "positivity",
    "riordan",
    "zeros",
]
