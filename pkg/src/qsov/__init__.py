"""Separation-of-variables toolkit for two-variable symmetric Laurent polynomials.

Exact layer: q-Pochhammer calculus over rationals (q = s^2), the polynomial
family P_lam, the separating operator with its inverse, eigenbases and
transition matrices.  Numeric layer: unit-circle quadrature for the kernel
identities, fractional integration, and the classical trigonometric
two-particle model.
"""

from . import exact, macdonald, numkernel, qpoly, ruijsenaars, sov, suites
from .exact import (
    Laurent1,
    Laurent2,
    Pair,
    QContext,
    divide_exact,
    divide_exact1,
    frac,
    qbinomial,
    qpochhammer,
    qshift,
    rational_str,
)

__all__ = [
    "Laurent1",
    "Laurent2",
    "Pair",
    "QContext",
    "divide_exact",
    "divide_exact1",
    "exact",
    "frac",
    "macdonald",
    "numkernel",
    "qbinomial",
    "qpochhammer",
    "qpoly",
    "qshift",
    "rational_str",
    "ruijsenaars",
    "sov",
    "suites",
]

__version__ = "0.1.0"
