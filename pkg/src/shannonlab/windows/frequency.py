"""Frequency windows and their closed-form inverse Fourier transforms.

Each window equals 1 on the signal band [-N/2, N/2], vanishes beyond the
sampling band edge L/2 and falls monotonically across the guard band in
between. The time representation psi replaces sinc in the regularized
partial sum.
"""

import math
from typing import overload

import numpy as np

from shannonlab.core.types import FloatArray, RealInput, as_array, as_output
from shannonlab.specfun import sinc
from shannonlab.windows.errors import WindowParameterError
from shannonlab.windows.models import (
    FrequencyWindow,
    FrequencyWindowKind,
    SamplingConfig,
)

CUBIC_SERIES_RADIUS = 1e-2


def _ramp(w: FrequencyWindow, a: FloatArray) -> FloatArray:
    """Evaluate the guard-band transition at |v| = a in (N/2, L/2)."""
    N = float(w.config.N)
    L = w.config.L
    width = L - N
    kind = w.kind
    if kind is FrequencyWindowKind.LINEAR:
        result: FloatArray = (L - 2.0 * a) / width
    elif kind is FrequencyWindowKind.CUBIC:
        result = (
            16.0 / width**3 * (a - 0.5 * L) ** 2 * (a - (3.0 * N - L) / 4.0)
        )
    elif kind is FrequencyWindowKind.RAISED_COSINE:
        result = 0.5 + 0.5 * np.cos((2.0 * a - N) * math.pi / width)
    else:
        # indicator of [-(N+L)/4, (N+L)/4] convolved with a unit-mass hat
        half = width / 4.0
        offset = a - (N + L) / 4.0
        result = np.where(
            offset >= 0.0,
            (half - offset) ** 2 / (2.0 * half * half),
            1.0 - (half + offset) ** 2 / (2.0 * half * half),
        )
    return result


@overload
def freq_window_hat(w: FrequencyWindow, v: float) -> float: ...
@overload
def freq_window_hat(w: FrequencyWindow, v: FloatArray) -> FloatArray: ...
def freq_window_hat(w: FrequencyWindow, v: RealInput) -> RealInput:
    """Evaluate the frequency window psi_hat at ``v``.

    Args:
        w: Frequency window description.
        v: Frequency value(s).

    Returns:
        psi_hat(v) in [0, 1].

    Example:
        >>> cfg = SamplingConfig(N=128, oversampling=1.0)
        >>> freq_window_hat(FrequencyWindow(kind="linear", config=cfg), 96.0)
        0.5
    """
    a = np.abs(as_array(v))
    N = float(w.config.N)
    L = w.config.L
    values = np.where(
        a <= 0.5 * N,
        1.0,
        np.where(a >= 0.5 * L, 0.0, _ramp(w, np.clip(a, 0.5 * N, 0.5 * L))),
    )
    return as_output(v, values)


def _cubic_factor(x: FloatArray) -> FloatArray:
    """Evaluate 3 (sinc x - cos x) / x^2, which tends to 1 at the origin."""
    small = np.abs(x) < CUBIC_SERIES_RADIUS
    safe = np.where(small, 1.0, x)
    sq = x * x
    series = 1.0 - sq / 10.0 + sq * sq / 280.0 - sq * sq * sq / 15120.0
    direct = 3.0 * (sinc(safe) - np.cos(safe)) / (safe * safe)
    result: FloatArray = np.where(small, series, direct)
    return result


def _cosine_factor(b: FloatArray) -> FloatArray:
    """Evaluate cos(pi b / 2) / (1 - b^2) without the poles at b = +-1."""
    gap = np.abs(b)
    result: FloatArray = (
        0.5 * math.pi * sinc(0.5 * math.pi * (1.0 - gap)) / (1.0 + gap)
    )
    return result


@overload
def freq_window_time(w: FrequencyWindow, t: float) -> float: ...
@overload
def freq_window_time(w: FrequencyWindow, t: FloatArray) -> FloatArray: ...
def freq_window_time(w: FrequencyWindow, t: RealInput) -> RealInput:
    """Evaluate psi, the inverse Fourier transform of psi_hat, at ``t``.

    All kinds share the factor ((N+L)/2) sinc((N+L)/2 pi t) and differ in
    the guard-band factor. Removable singularities are evaluated through
    series or exact rewrites, so psi(0) = (N+L)/2 for every kind.

    Args:
        w: Frequency window description.
        t: Time value(s).

    Returns:
        psi(t).
    """
    arr = as_array(t)
    N = float(w.config.N)
    L = w.config.L
    width = L - N
    center = 0.5 * (N + L)
    common = center * sinc(center * math.pi * arr)
    kind = w.kind
    if kind is FrequencyWindowKind.LINEAR:
        factor = sinc(0.5 * width * math.pi * arr)
    elif kind is FrequencyWindowKind.CUBIC:
        factor = _cubic_factor(0.5 * width * math.pi * arr)
    elif kind is FrequencyWindowKind.RAISED_COSINE:
        factor = _cosine_factor(width * arr)
    else:
        factor = sinc(0.25 * width * math.pi * arr) ** 2
    return as_output(t, common * factor)


def lin_window_decay_bound(config: SamplingConfig, x: RealInput) -> RealInput:
    """Decay envelope 2 / (L N lambda pi^2 x^2) of (1/L) psi_lin.

    Args:
        config: Sampling configuration with positive oversampling.
        x: Nonzero time value(s).

    Returns:
        The envelope value(s).

    Raises:
        WindowParameterError: If oversampling is zero or any x is zero.
    """
    if config.oversampling <= 0.0:
        raise WindowParameterError(
            "oversampling", config.oversampling, "decay bound needs lambda > 0"
        )
    arr = as_array(x)
    if np.any(arr == 0.0):
        raise WindowParameterError("x", 0.0, "decay bound is singular at x = 0")
    values = 2.0 / (config.L * config.N * config.oversampling * math.pi**2 * arr**2)
    return as_output(x, values)
