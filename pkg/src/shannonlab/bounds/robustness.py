"""Worst-case robustness bounds of the localized time-window formula.

Perturbing every sample by at most epsilon changes the regularized
reconstruction by at most epsilon (2 + L phi_hat(0)); for the sinh-type and
continuous Kaiser-Bessel windows this grows only like sqrt(m).
"""

import math

from shannonlab.bounds.errors import BoundPreconditionError


def _check_epsilon(bound: str, epsilon: float) -> None:
    if epsilon < 0.0:
        raise BoundPreconditionError(
            bound, f"epsilon must be non-negative, got {epsilon}"
        )


def _check_shape(bound: str, lam: float, m: int) -> None:
    if lam <= 0.0:
        raise BoundPreconditionError(bound, f"lambda must be positive, got {lam}")
    if m < 2:
        raise BoundPreconditionError(bound, f"m must be at least 2, got {m}")


def robustness_bound_general(epsilon: float, L: float, phi_hat_zero: float) -> float:
    """Return epsilon (2 + L phi_hat(0)) for an arbitrary admissible window.

    Raises:
        BoundPreconditionError: If epsilon < 0.
    """
    _check_epsilon("robustness_bound_general", epsilon)
    return epsilon * (2.0 + L * phi_hat_zero)


def robustness_bound_sinh(epsilon: float, lam: float, m: int) -> float:
    """Return epsilon (2 + sqrt((2+2 lambda)/lambda) sqrt(m) / (1 - e^(-2 beta))).

    beta = pi m lambda / (1 + lambda) is the sinh window shape parameter.

    Raises:
        BoundPreconditionError: If epsilon < 0, lambda <= 0 or m < 2.
    """
    _check_epsilon("robustness_bound_sinh", epsilon)
    _check_shape("robustness_bound_sinh", lam, m)
    beta = math.pi * m * lam / (1.0 + lam)
    growth = math.sqrt((2.0 + 2.0 * lam) / lam) * math.sqrt(m)
    return epsilon * (2.0 + growth / -math.expm1(-2.0 * beta))


def robustness_bound_ckb(epsilon: float, lam: float, m: int) -> float:
    """Return epsilon (2 + sqrt((2+2 lambda)/lambda) sqrt(m)).

    Raises:
        BoundPreconditionError: If epsilon < 0, lambda <= 0 or m < 2.
    """
    _check_epsilon("robustness_bound_ckb", epsilon)
    _check_shape("robustness_bound_ckb", lam, m)
    return epsilon * (2.0 + math.sqrt((2.0 + 2.0 * lam) / lam) * math.sqrt(m))


def noisy_reconstruction_bound(
    approx_bound: float, epsilon: float, L: float, phi_hat_zero: float
) -> float:
    """Bound the total error of a reconstruction from perturbed samples.

    The approximation error of the clean reconstruction and the robustness
    bound of the perturbation add up by the triangle inequality.

    Raises:
        BoundPreconditionError: If epsilon < 0.
    """
    return approx_bound + robustness_bound_general(epsilon, L, phi_hat_zero)
