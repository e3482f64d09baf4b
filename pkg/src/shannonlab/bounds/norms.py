"""Operator-norm bracket and worst-case noise bounds of the Shannon sum.

The norm of the T-th Shannon sampling operator equals max_t s_T(t), where
s_T(t) = sum_{|k|<=T} |sinc(L pi t - k pi)|. It grows like (2/pi) ln T and
is bracketed by closed forms in ln T + 2 ln 2 + gamma.
"""

import math

import numpy as np
from scipy.optimize import minimize_scalar

from shannonlab.bounds.errors import BoundPreconditionError
from shannonlab.bounds.models import NormBracket
from shannonlab.reconstruct.operators import s_T_function
from shannonlab.specfun import EULER_GAMMA, GAMMA_TERM, odd_harmonic

DEFAULT_REFINEMENT = 10_000


def _require_positive_T(bound: str, T: int) -> None:
    if T < 1:
        raise BoundPreconditionError(bound, f"T must be at least 1, got {T}")


def _log_core(T: int) -> float:
    return 2.0 / math.pi * (math.log(T) + 2.0 * math.log(2.0) + EULER_GAMMA)


def shannon_norm_bracket(T: int) -> NormBracket:
    """Return closed-form lower and upper bounds on the norm of S_T.

    Args:
        T: Truncation index, at least 1.

    Returns:
        NormBracket with
        lower = (2/pi)(ln T + 2 ln 2 + gamma) - 1/(pi T (2T+1)) and
        upper = (2/pi)(ln T + 2 ln 2 + gamma) + (T+2)/(pi T (T+1)).

    Raises:
        BoundPreconditionError: If T < 1.
    """
    _require_positive_T("shannon_norm_bracket", T)
    core = _log_core(T)
    return NormBracket(
        lower=core - 1.0 / (math.pi * T * (2 * T + 1)),
        upper=core + (T + 2) / (math.pi * T * (T + 1)),
        T=T,
    )


def shannon_norm_numeric(
    T: int, L: float, refinement: int = DEFAULT_REFINEMENT
) -> float:
    """Compute max_t s_T(t) numerically.

    s_T(t + n/L) < s_T(t) for integers n != 0 with t in [0, 1/L], so the
    global maximum lies in the first cell [0, 1/L]. The cell is scanned on
    ``refinement + 1`` points and the best point is refined with a bounded
    scalar search on its two neighbouring intervals.

    Args:
        T: Truncation index, at least 1.
        L: Sampling rate; the result does not depend on it.
        refinement: Number of coarse intervals on [0, 1/L].

    Returns:
        The numerical operator norm.

    Raises:
        BoundPreconditionError: If T < 1 or refinement < 2.
    """
    _require_positive_T("shannon_norm_numeric", T)
    if refinement < 2:
        raise BoundPreconditionError(
            "shannon_norm_numeric", f"refinement must be at least 2, got {refinement}"
        )
    cell = 1.0 / L
    coarse = np.linspace(0.0, cell, refinement + 1)
    values = np.asarray(s_T_function(T, L, coarse))
    best = int(np.argmax(values))
    lo = coarse[max(best - 1, 0)]
    hi = coarse[min(best + 1, refinement)]

    def negated(t: float) -> float:
        return -float(s_T_function(T, L, t))

    refined = minimize_scalar(
        negated,
        bounds=(float(lo), float(hi)),
        method="bounded",
        options={"xatol": 1e-12 * cell},
    )
    return max(float(values[best]), -float(refined.fun))


def gamma_term() -> float:
    """Return (4/pi) ln 2 + 2 gamma / pi = 1.2500093..., the bracket offset."""
    return GAMMA_TERM


def s_t_half_node(T: int) -> float:
    """Closed form of s_T(1/(2L)) = (4/pi) sum_{k=1}^T 1/(2k-1) + 2/(pi(2T+1)).

    Raises:
        BoundPreconditionError: If T < 1.
    """
    _require_positive_T("s_t_half_node", T)
    return 4.0 / math.pi * odd_harmonic(T) + 2.0 / (math.pi * (2 * T + 1))


def noise_error_bounds(T: int, epsilon: float) -> tuple[float, float]:
    """Bracket the worst-case error caused by perturbations of size epsilon.

    Args:
        T: Truncation index, at least 1.
        epsilon: Perturbation amplitude, non-negative.

    Returns:
        (lower, upper) with lower = epsilon((2/pi) ln T + 5/4) and
        upper = lower + epsilon / (2T).

    Raises:
        BoundPreconditionError: If T < 1 or epsilon < 0.
    """
    _require_positive_T("noise_error_bounds", T)
    if epsilon < 0.0:
        raise BoundPreconditionError(
            "noise_error_bounds", f"epsilon must be non-negative, got {epsilon}"
        )
    lower = epsilon * (2.0 / math.pi * math.log(T) + 1.25)
    upper = epsilon * (2.0 / math.pi * math.log(T) + 1.25 + 1.0 / (2 * T))
    return lower, upper
