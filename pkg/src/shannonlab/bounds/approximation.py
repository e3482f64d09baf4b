"""Approximation-error bounds of the regularized reconstructions.

Frequency windows give algebraic decay in T - L, time windows give
exponential decay in m. Each evaluator returns the bound for a signal of
L2 norm ``f_norm`` and raises BoundPreconditionError outside the parameter
range where the bound is established.
"""

import math

import numpy as np

from shannonlab.bounds.errors import BoundPreconditionError
from shannonlab.windows.models import TimeWindow
from shannonlab.windows.time import time_window_eval, window_integral

_RATIO_SLACK = 1e-12


def _rate(N: float, lam: float) -> float:
    return N * (1.0 + lam)


def _check_frequency_preconditions(bound: str, N: float, lam: float, T: float) -> float:
    if lam <= 0.0:
        raise BoundPreconditionError(bound, f"lambda must be positive, got {lam}")
    L = _rate(N, lam)
    if T <= L:
        raise BoundPreconditionError(bound, f"T = {T} must exceed L = {L}")
    return L


def freq_lin_error_bound(N: float, lam: float, T: float, f_norm: float) -> float:
    """Error bound of the linear frequency window, decaying like (T - L)^(-3/2).

    Returns:
        sqrt(2L/3) * 2(1+lambda) / (pi^2 lambda) * (T - L)^(-3/2) * f_norm.

    Raises:
        BoundPreconditionError: If lambda <= 0 or T <= L.
    """
    L = _check_frequency_preconditions("freq_lin_error_bound", N, lam, T)
    constant = math.sqrt(2.0 * L / 3.0) * 2.0 * (1.0 + lam) / (math.pi**2 * lam)
    return constant * (T - L) ** -1.5 * f_norm


def freq_cub_error_bound(N: float, lam: float, T: float, f_norm: float) -> float:
    """Error bound shared by the cubic, raised-cosine and B-spline windows.

    These windows are continuously differentiable across the guard band and
    all decay like (T - L)^(-5/2).

    Returns:
        sqrt(2L/5) * 24(1+lambda)^2 / (pi^3 lambda^2) * (T - L)^(-5/2) * f_norm.

    Raises:
        BoundPreconditionError: If lambda <= 0 or T <= L.
    """
    L = _check_frequency_preconditions("freq_cub_error_bound", N, lam, T)
    constant = (
        math.sqrt(2.0 * L / 5.0) * 24.0 * (1.0 + lam) ** 2 / (math.pi**3 * lam**2)
    )
    return constant * (T - L) ** -2.5 * f_norm


def _check_time_preconditions(bound: str, lam: float, m: int) -> None:
    if lam <= 0.0:
        raise BoundPreconditionError(bound, f"lambda must be positive, got {lam}")
    if m < 2:
        raise BoundPreconditionError(bound, f"m must be at least 2, got {m}")


def sinh_error_bound(N: float, lam: float, m: int, f_norm: float) -> float:
    """Exponential error bound sqrt(N) e^(-m pi lambda / (1 + lambda)) f_norm.

    Raises:
        BoundPreconditionError: If lambda <= 0 or m < 2.
    """
    _check_time_preconditions("sinh_error_bound", lam, m)
    return math.sqrt(N) * math.exp(-m * math.pi * lam / (1.0 + lam)) * f_norm


def ckb_error_bound(N: float, lam: float, m: int, f_norm: float) -> float:
    """Exponential error bound of the continuous Kaiser-Bessel window.

    Returns:
        7 sqrt(N) m pi lambda (1 + lambda + 4 m lambda) / (4 (1+lambda)^2)
        * e^(-m pi lambda / (1 + lambda)) * f_norm.

    Raises:
        BoundPreconditionError: If m < 2 or lambda < 1/(m - 1).
    """
    _check_time_preconditions("ckb_error_bound", lam, m)
    if lam < 1.0 / (m - 1) - _RATIO_SLACK:
        raise BoundPreconditionError(
            "ckb_error_bound", f"lambda = {lam} is below 1/(m-1) = {1.0 / (m - 1)}"
        )
    prefactor = (
        7.0
        * math.sqrt(N)
        * m
        * math.pi
        * lam
        * (1.0 + lam + 4.0 * m * lam)
        / (4.0 * (1.0 + lam) ** 2)
    )
    return prefactor * math.exp(-m * math.pi * lam / (1.0 + lam)) * f_norm


def ckb_bound_applies(lam: float, m: int) -> bool:
    """Return True if the Kaiser-Bessel bound holds for (lambda, m)."""
    return m >= 2 and lam >= 1.0 / (m - 1) - _RATIO_SLACK


def general_error_constants(w: TimeWindow, grid_points: int) -> tuple[float, float]:
    """Evaluate the two error constants of a general time window.

    E1 = sqrt(N) max_{|v| <= N/2} |1 - integral_{v-L/2}^{v+L/2} phi_hat(u) du|
    is maximized over ``grid_points`` frequencies in [0, N/2] (the integrand
    is even in v). E2 = sqrt(2L)/(pi m) phi(m/L), which vanishes for windows
    that reach zero at the support boundary.

    Args:
        w: Time window.
        grid_points: Number of sampled frequencies, at least 2.

    Returns:
        (E1, E2); the reconstruction error is at most (E1 + E2) ||f||.

    Raises:
        BoundPreconditionError: If grid_points < 2.
    """
    if grid_points < 2:
        raise BoundPreconditionError(
            "general_error_constants",
            f"grid_points must be at least 2, got {grid_points}",
        )
    N = w.config.N
    L = w.config.L
    v = np.linspace(0.0, 0.5 * N, grid_points)
    mass = np.asarray(window_integral(w, v - 0.5 * L, v + 0.5 * L))
    e1 = math.sqrt(N) * float(np.max(np.abs(1.0 - mass)))
    e2 = math.sqrt(2.0 * L) / (math.pi * w.m) * time_window_eval(w, w.support)
    return e1, e2
