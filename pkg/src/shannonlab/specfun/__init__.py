"""Special functions and constants for window formulas and error bounds.

This package provides double-precision evaluators for sinc, the modified
Bessel function I0, the modified Struve function L0, the sine integral and
harmonic numbers, together with the composite Gauss-Legendre rule used for
window Fourier transforms.

Example:
    >>> from shannonlab.specfun import bessel_i0, sinc
    >>> round(sinc(0.0), 12)
    1.0
    >>> bessel_i0(0.0)
    1.0
"""

from shannonlab.specfun.errors import SeriesOverflowError, SpecialFunctionError
from shannonlab.specfun.functions import (
    EULER_GAMMA,
    GAMMA_TERM,
    bessel_i0,
    bessel_struve_difference,
    ckb_bracket,
    harmonic,
    odd_harmonic,
    sinc,
    sine_integral,
    struve_l0,
)
from shannonlab.specfun.models import DEFAULT_TOLERANCE, SeriesTolerance
from shannonlab.specfun.quadrature import composite_nodes, gauss_legendre

__all__ = [
    "DEFAULT_TOLERANCE",
    "EULER_GAMMA",
    "GAMMA_TERM",
    "SeriesOverflowError",
    "SeriesTolerance",
    "SpecialFunctionError",
    "bessel_i0",
    "bessel_struve_difference",
    "ckb_bracket",
    "composite_nodes",
    "gauss_legendre",
    "harmonic",
    "odd_harmonic",
    "sinc",
    "sine_integral",
    "struve_l0",
]
