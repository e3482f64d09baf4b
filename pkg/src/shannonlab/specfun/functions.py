"""Scalar special functions used by window formulas and error bounds.

Every function accepts a float or a numpy array and returns the same kind
of value. Power series sum positive terms only (no cancellation) and stop
according to a SeriesTolerance. The sine integral uses its power series up
to |x| = 16, Gauss-Legendre quadrature of sinc from 16 up to |x| = 32 and
the auxiliary-function asymptotic expansion beyond.
"""

import math
from typing import overload

import numpy as np

from shannonlab.core.types import FloatArray, RealInput, as_array, as_output
from shannonlab.specfun.errors import SeriesOverflowError
from shannonlab.specfun.models import SeriesTolerance
from shannonlab.specfun.quadrature import gauss_legendre

EULER_GAMMA = 0.5772156649015329
GAMMA_TERM = 4.0 / math.pi * math.log(2.0) + 2.0 * EULER_GAMMA / math.pi

SINC_TAYLOR_RADIUS = 1e-4
SERIES_ARGUMENT_LIMIT = 700.0
SINE_INTEGRAL_SERIES_LIMIT = 16.0
SINE_INTEGRAL_ASYMPTOTIC_START = 32.0
_ALTERNATING_REL_STOP = 1e-17
_MAX_ASYMPTOTIC_TERMS = 60


def _resolve(tolerance: SeriesTolerance | None) -> SeriesTolerance:
    return tolerance if tolerance is not None else SeriesTolerance.from_settings()


def _check_range(function: str, values: FloatArray, limit: float) -> None:
    """Raise SeriesOverflowError if any |value| exceeds ``limit``."""
    if values.size == 0:
        return
    magnitudes = np.abs(values)
    worst = int(np.argmax(np.where(np.isnan(magnitudes), -1.0, magnitudes)))
    if magnitudes.flat[worst] > limit:
        raise SeriesOverflowError(function, float(values.flat[worst]), limit)


@overload
def sinc(x: float) -> float: ...
@overload
def sinc(x: FloatArray) -> FloatArray: ...
def sinc(x: RealInput) -> RealInput:
    """Evaluate sin(x)/x with sinc(0) = 1.

    Args:
        x: Finite real argument (no factor pi is applied).

    Returns:
        The unnormalized sinc value, even in x and bounded by 1.
    """
    arr = as_array(x)
    small = np.abs(arr) < SINC_TAYLOR_RADIUS
    safe = np.where(small, 1.0, arr)
    values = np.where(small, 1.0 - arr * arr / 6.0, np.sin(safe) / safe)
    return as_output(x, values)


@overload
def bessel_i0(x: float, tolerance: SeriesTolerance | None = None) -> float: ...
@overload
def bessel_i0(
    x: FloatArray, tolerance: SeriesTolerance | None = None
) -> FloatArray: ...
def bessel_i0(x: RealInput, tolerance: SeriesTolerance | None = None) -> RealInput:
    """Modified Bessel function of the first kind of order zero.

    Sums sum_k (x/2)^(2k) / (k!)^2, which equals sum_k x^(2k) / ((2k)!!)^2.

    Args:
        x: Real argument with |x| <= 700.
        tolerance: Series stop rule, defaults to the configured cutoff.

    Returns:
        I0(x) >= 1.

    Raises:
        SeriesOverflowError: If |x| exceeds 700.
    """
    arr = as_array(x)
    _check_range("bessel_i0", arr, SERIES_ARGUMENT_LIMIT)
    cutoff = _resolve(tolerance).rel_cutoff
    quarter_square = 0.25 * arr * arr
    term = np.ones_like(arr)
    total = np.ones_like(arr)
    k = 0
    while True:
        k += 1
        term = term * quarter_square / float(k * k)
        total = total + term
        if not np.any(term > cutoff * total):
            break
    return as_output(x, total)


@overload
def struve_l0(x: float, tolerance: SeriesTolerance | None = None) -> float: ...
@overload
def struve_l0(
    x: FloatArray, tolerance: SeriesTolerance | None = None
) -> FloatArray: ...
def struve_l0(x: RealInput, tolerance: SeriesTolerance | None = None) -> RealInput:
    """Modified Struve function of order zero.

    Evaluates (2x/pi) * sum_k x^(2k) / ((2k+1)!!)^2.

    Args:
        x: Real argument with |x| <= 700.
        tolerance: Series stop rule, defaults to the configured cutoff.

    Returns:
        L0(x), an odd function of x.

    Raises:
        SeriesOverflowError: If |x| exceeds 700.
    """
    arr = as_array(x)
    _check_range("struve_l0", arr, SERIES_ARGUMENT_LIMIT)
    cutoff = _resolve(tolerance).rel_cutoff
    square = arr * arr
    term = np.ones_like(arr)
    total = np.ones_like(arr)
    k = 0
    while True:
        k += 1
        term = term * square / float((2 * k + 1) ** 2)
        total = total + term
        if not np.any(term > cutoff * total):
            break
    return as_output(x, 2.0 * arr / math.pi * total)


@overload
def bessel_struve_difference(x: float) -> float: ...
@overload
def bessel_struve_difference(x: FloatArray) -> FloatArray: ...
def bessel_struve_difference(x: RealInput) -> RealInput:
    """Evaluate I0(x) - L0(x) without cancellation.

    Uses (2/pi) * integral_0^(pi/2) exp(-x cos s) ds, which follows from the
    integral forms of I0 and L0. Subtracting the two series would lose all
    significant digits once e^x approaches 1/eps.

    Args:
        x: Real argument with |x| <= 700.

    Returns:
        I0(x) - L0(x), positive and decreasing on [0, inf).

    Raises:
        SeriesOverflowError: If |x| exceeds 700.
    """
    arr = as_array(x)
    _check_range("bessel_struve_difference", arr, SERIES_ARGUMENT_LIMIT)

    def integrand(s: FloatArray) -> FloatArray:
        result: FloatArray = np.exp(-arr[..., None] * np.cos(s))
        return result

    values = 2.0 / math.pi * gauss_legendre(integrand, 0.0, 0.5 * math.pi)
    return as_output(x, values)


def _sine_integral_series(x: FloatArray) -> FloatArray:
    """Power series sum_k (-1)^k x^(2k+1) / ((2k+1)(2k+1)!) for |x| <= 16."""
    square = x * x
    term = x.copy()
    total = x.copy()
    largest = float(np.max(np.abs(x))) if x.size else 0.0
    k = 0
    while True:
        k += 1
        term = -term * square / float((2 * k) * (2 * k + 1))
        contribution = term / float(2 * k + 1)
        total = total + contribution
        past_peak = 2 * k + 1 > largest
        if past_peak and np.all(
            np.abs(contribution) <= _ALTERNATING_REL_STOP * np.abs(total)
        ):
            break
    return total


def _sine_integral_bridge(x: FloatArray) -> FloatArray:
    """Si(16) plus the integral of sin(w)/w from 16 to x, for 16 < x <= 32."""
    start = SINE_INTEGRAL_SERIES_LIMIT
    base = float(_sine_integral_series(np.array([start]))[0])
    span = x - start

    def integrand(s: FloatArray) -> FloatArray:
        w = start + span[..., None] * s
        result: FloatArray = span[..., None] * np.sin(w) / w
        return result

    result: FloatArray = base + gauss_legendre(integrand, 0.0, 1.0)
    return result


def _sine_integral_asymptotic(x: FloatArray) -> FloatArray:
    """Auxiliary-function expansion for x > 32, truncated at its smallest term."""
    inverse_square = 1.0 / (x * x)
    f_term = np.ones_like(x)
    g_term = np.ones_like(x)
    f_sum = f_term.copy()
    g_sum = g_term.copy()
    f_active = np.ones(x.shape, dtype=bool)
    g_active = np.ones(x.shape, dtype=bool)
    for k in range(1, _MAX_ASYMPTOTIC_TERMS):
        next_f = -f_term * float((2 * k - 1) * (2 * k)) * inverse_square
        next_g = -g_term * float((2 * k) * (2 * k + 1)) * inverse_square
        f_active &= np.abs(next_f) < np.abs(f_term)
        g_active &= np.abs(next_g) < np.abs(g_term)
        f_sum = f_sum + np.where(f_active, next_f, 0.0)
        g_sum = g_sum + np.where(g_active, next_g, 0.0)
        f_term = np.where(f_active, next_f, f_term)
        g_term = np.where(g_active, next_g, g_term)
        f_active &= np.abs(f_term) > _ALTERNATING_REL_STOP
        g_active &= np.abs(g_term) > _ALTERNATING_REL_STOP
        if not (f_active.any() or g_active.any()):
            break
    aux_f = f_sum / x
    aux_g = g_sum * inverse_square
    result: FloatArray = 0.5 * math.pi - aux_f * np.cos(x) - aux_g * np.sin(x)
    return result


@overload
def sine_integral(x: float) -> float: ...
@overload
def sine_integral(x: FloatArray) -> FloatArray: ...
def sine_integral(x: RealInput) -> RealInput:
    """Sine integral Si(x) = integral_0^x sin(w)/w dw.

    Args:
        x: Finite real argument.

    Returns:
        Si(x), odd in x with limit pi/2 as x tends to infinity.
    """
    arr = as_array(x)
    flat = arr.ravel()
    magnitude = np.abs(flat)
    near = magnitude <= SINE_INTEGRAL_SERIES_LIMIT
    far = magnitude > SINE_INTEGRAL_ASYMPTOTIC_START
    middle = ~near & ~far
    sign = np.sign(flat)
    values = np.empty_like(flat)
    if near.any():
        values[near] = _sine_integral_series(flat[near])
    if middle.any():
        values[middle] = sign[middle] * _sine_integral_bridge(magnitude[middle])
    if far.any():
        values[far] = sign[far] * _sine_integral_asymptotic(magnitude[far])
    return as_output(x, values.reshape(arr.shape))


def harmonic(T: int) -> float:
    """Return the T-th harmonic number H_T = sum_{k=1}^T 1/k.

    Args:
        T: Positive integer.

    Returns:
        H_T, correctly rounded summation of the reciprocals.

    Raises:
        ValueError: If T < 1.
    """
    if T < 1:
        raise ValueError(f"harmonic number needs T >= 1, got {T}")
    return math.fsum(np.reciprocal(np.arange(1, T + 1, dtype=np.float64)))


def odd_harmonic(T: int) -> float:
    """Return sum_{k=1}^T 1/(2k-1), which equals H_2T - H_T / 2.

    Raises:
        ValueError: If T < 1.
    """
    if T < 1:
        raise ValueError(f"odd harmonic sum needs T >= 1, got {T}")
    return math.fsum(np.reciprocal(np.arange(1, 2 * T, 2, dtype=np.float64)))


@overload
def ckb_bracket(beta: float) -> float: ...
@overload
def ckb_bracket(beta: FloatArray) -> FloatArray: ...
def ckb_bracket(beta: RealInput) -> RealInput:
    """Evaluate I0(beta) - L0(beta) - 1 + (2/pi) Si(beta).

    This quantity controls the inner part of the continuous Kaiser-Bessel
    approximation error and lies in (0, 1) for the shape parameters used in
    practice.

    Args:
        beta: Positive shape parameter, at most 700.

    Returns:
        The bracket value.

    Raises:
        ValueError: If any beta is not positive.
        SeriesOverflowError: If beta exceeds 700.
    """
    arr = as_array(beta)
    if np.any(arr <= 0.0):
        raise ValueError("ckb_bracket needs beta > 0")
    values = (
        bessel_struve_difference(arr) - 1.0 + 2.0 / math.pi * sine_integral(arr)
    )
    return as_output(beta, values)
