"""Time windows of the localized sampling formula and their transforms.

Both window families live on [-m/L, m/L]. The continuous Kaiser-Bessel
window has a closed-form Fourier transform; the sinh-type transform is
computed by composite Gauss-Legendre quadrature after the substitution
t = (m/L) sin(s), which removes the square-root behavior at the support
boundary.
"""

import math
from collections.abc import Callable
from typing import overload

import numpy as np

from shannonlab.core.config import get_settings
from shannonlab.core.types import FloatArray, RealInput, as_array, as_output
from shannonlab.specfun import bessel_i0, gauss_legendre, sinc
from shannonlab.windows.errors import WindowParameterError
from shannonlab.windows.models import TimeWindow, TimeWindowKind

MIN_MEMBERSHIP_GRID = 16
MEMBERSHIP_TOLERANCE = 1e-12
_SINHC_SERIES_RADIUS = 1e-4


def _sinhc(x: FloatArray) -> FloatArray:
    small = np.abs(x) < _SINHC_SERIES_RADIUS
    safe = np.where(small, 1.0, x)
    result: FloatArray = np.where(small, 1.0 + x * x / 6.0, np.sinh(safe) / safe)
    return result


def _window_values(w: TimeWindow, t: FloatArray) -> FloatArray:
    scaled = w.config.L * t / w.m
    inside = np.abs(scaled) <= 1.0
    root = np.sqrt(np.clip(1.0 - scaled * scaled, 0.0, 1.0))
    beta = w.beta
    if w.kind is TimeWindowKind.SINH:
        values = np.sinh(beta * root) / math.sinh(beta)
    else:
        values = (bessel_i0(beta * root) - 1.0) / (bessel_i0(beta) - 1.0)
    result: FloatArray = np.where(inside, values, 0.0)
    return result


@overload
def time_window_eval(w: TimeWindow, t: float) -> float: ...
@overload
def time_window_eval(w: TimeWindow, t: FloatArray) -> FloatArray: ...
def time_window_eval(w: TimeWindow, t: RealInput) -> RealInput:
    """Evaluate the time window phi at ``t``.

    Args:
        w: Time window description.
        t: Time value(s).

    Returns:
        phi(t) in [0, 1]; zero outside [-m/L, m/L].

    Example:
        >>> cfg = SamplingConfig(N=256, oversampling=1.0)
        >>> time_window_eval(TimeWindow(kind="sinh", m=5, config=cfg), 0.0)
        1.0
    """
    return as_output(t, _window_values(w, as_array(t)))


def _ckb_transform(w: TimeWindow, v: FloatArray) -> FloatArray:
    beta = w.beta
    prefactor = 2.0 * w.m / ((bessel_i0(beta) - 1.0) * w.config.L)
    scaled = 2.0 * math.pi * w.m * v / (beta * w.config.L)
    below = np.abs(scaled) < 1.0
    gap = np.abs(1.0 - scaled * scaled)
    root = beta * np.sqrt(gap)
    result: FloatArray = prefactor * (
        np.where(below, _sinhc(root), sinc(root)) - sinc(beta * scaled)
    )
    return result


def _sinh_transform(w: TimeWindow, v: FloatArray) -> FloatArray:
    beta = w.beta
    support = w.support

    def integrand(s: FloatArray) -> FloatArray:
        weight = np.sinh(beta * np.cos(s)) / math.sinh(beta) * np.cos(s)
        phase = 2.0 * math.pi * v[..., None] * support * np.sin(s)
        result: FloatArray = weight * np.cos(phase)
        return result

    panels = get_settings().quadrature_panels
    return 2.0 * support * gauss_legendre(integrand, 0.0, 0.5 * math.pi, panels)


@overload
def time_window_ft(w: TimeWindow, v: float) -> float: ...
@overload
def time_window_ft(w: TimeWindow, v: FloatArray) -> FloatArray: ...
def time_window_ft(w: TimeWindow, v: RealInput) -> RealInput:
    """Evaluate the Fourier transform 2 * integral_0^(m/L) phi(t) cos(2 pi v t) dt.

    The continuous Kaiser-Bessel transform uses its closed form with the
    scaled frequency w = 2 pi m v / (beta L), switching branches at |w| = 1.
    The sinh-type transform is computed by quadrature.

    Args:
        w: Time window description.
        v: Frequency value(s).

    Returns:
        phi_hat(v), an even function of v.
    """
    arr = as_array(v)
    if w.kind is TimeWindowKind.CKB:
        values = _ckb_transform(w, arr)
    else:
        values = _sinh_transform(w, arr)
    return as_output(v, values)


@overload
def time_window_regularized_sinc(w: TimeWindow, t: float) -> float: ...
@overload
def time_window_regularized_sinc(w: TimeWindow, t: FloatArray) -> FloatArray: ...
def time_window_regularized_sinc(w: TimeWindow, t: RealInput) -> RealInput:
    """Evaluate the regularized kernel sinc(L pi t) * phi(t)."""
    arr = as_array(t)
    values = sinc(w.config.L * math.pi * arr) * _window_values(w, arr)
    return as_output(t, values)


def window_integral(w: TimeWindow, a: RealInput, b: RealInput) -> RealInput:
    """Integrate phi_hat over [a, b] without evaluating phi_hat itself.

    Uses integral_a^b phi_hat(u) du =
    2 * integral_0^(m/L) phi(t) (b sinc(2 pi b t) - a sinc(2 pi a t)) dt.

    Args:
        w: Time window description.
        a: Lower limit(s).
        b: Upper limit(s), broadcast against ``a``.

    Returns:
        The integral, as an array if either limit is an array.
    """
    lower, upper = np.broadcast_arrays(as_array(a), as_array(b))
    support = w.support

    def integrand(s: FloatArray) -> FloatArray:
        t = support * np.sin(s)
        weight = _window_values(w, t) * np.cos(s)
        hi = upper[..., None]
        lo = lower[..., None]
        kernel = hi * sinc(2.0 * math.pi * hi * t) - lo * sinc(2.0 * math.pi * lo * t)
        result: FloatArray = weight * kernel
        return result

    panels = get_settings().quadrature_panels
    values = 2.0 * support * gauss_legendre(integrand, 0.0, 0.5 * math.pi, panels)
    template = a if isinstance(a, np.ndarray) else b
    return as_output(template, values)


def check_window_samples(
    phi: Callable[[FloatArray], FloatArray], support: float, grid_points: int
) -> bool:
    """Check the window-set conditions for an arbitrary vectorized window.

    The window must be even, vanish outside [-support, support], equal 1 at
    the origin, take values in [0, 1] and be non-increasing on
    [0, support], all checked on ``grid_points`` samples.

    Args:
        phi: Vectorized window function.
        support: Support radius m/L.
        grid_points: Number of samples on [0, support].

    Returns:
        True if every sampled condition holds.
    """
    tol = MEMBERSHIP_TOLERANCE
    t = np.linspace(0.0, support, grid_points)
    outside = support * np.linspace(1.0, 1.5, grid_points)[1:]
    right = phi(t)
    left = phi(-t)
    checks = (
        abs(float(right[0]) - 1.0) <= tol,
        bool(np.all(np.abs(right - left) <= tol)),
        bool(np.all((right >= -tol) & (right <= 1.0 + tol))),
        bool(np.all(np.diff(right) <= tol)),
        bool(np.all(np.abs(phi(outside)) <= tol)),
        bool(np.all(np.abs(phi(-outside)) <= tol)),
    )
    return all(checks)


def validate_phi_membership(w: TimeWindow, grid_points: int) -> bool:
    """Check that ``w`` belongs to the admissible window set on a sampled grid.

    Args:
        w: Time window description.
        grid_points: Samples on [0, m/L], at least 16.

    Returns:
        True if evenness, support, phi(0) = 1, range and monotonicity hold.

    Raises:
        WindowParameterError: If ``grid_points`` is below 16.
    """
    if grid_points < MIN_MEMBERSHIP_GRID:
        raise WindowParameterError(
            "grid_points", grid_points, f"must be at least {MIN_MEMBERSHIP_GRID}"
        )
    return check_window_samples(
        lambda t: _window_values(w, t), w.support, grid_points
    )
