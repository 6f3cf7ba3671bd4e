"""Exact arithmetic substrate: series, polynomials, matrices, intervals."""

from .interval import RationalInterval
from .matrix import ExactMatrix, cauchy_binet, det_fraction_free, minor
from .polynomial import ExactPolynomial, poly_gcd
from .series import (
    TruncatedSeries,
    normalize,
    series_compose,
    series_div,
    series_mul,
    series_reversion,
    series_sqrt,
)

__all__ = [
    "ExactMatrix",
    "ExactPolynomial",
    "RationalInterval",
    "TruncatedSeries",
    "cauchy_binet",
    "det_fraction_free",
    "minor",
    "normalize",
    "poly_gcd",
    "series_compose",
    "series_div",
    "series_mul",
    "series_reversion",
    "series_sqrt",
]
