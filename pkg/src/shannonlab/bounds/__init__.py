"""Closed-form norm, approximation-error and robustness bounds.

Example:
    >>> from shannonlab.bounds import sinh_error_bound
    >>> round(sinh_error_bound(256, 1.0, 10, 1.0), 9)
    2.411e-06
"""

from shannonlab.bounds.approximation import (
    ckb_bound_applies,
    ckb_error_bound,
    freq_cub_error_bound,
    freq_lin_error_bound,
    general_error_constants,
    sinh_error_bound,
)
from shannonlab.bounds.errors import BoundError, BoundPreconditionError
from shannonlab.bounds.models import ErrorReport, NormBracket
from shannonlab.bounds.norms import (
    gamma_term,
    noise_error_bounds,
    s_t_half_node,
    shannon_norm_bracket,
    shannon_norm_numeric,
)
from shannonlab.bounds.robustness import (
    noisy_reconstruction_bound,
    robustness_bound_ckb,
    robustness_bound_general,
    robustness_bound_sinh,
)

__all__ = [
    "BoundError",
    "BoundPreconditionError",
    "ErrorReport",
    "NormBracket",
    "ckb_bound_applies",
    "ckb_error_bound",
    "freq_cub_error_bound",
    "freq_lin_error_bound",
    "gamma_term",
    "general_error_constants",
    "noise_error_bounds",
    "noisy_reconstruction_bound",
    "robustness_bound_ckb",
    "robustness_bound_general",
    "robustness_bound_sinh",
    "s_t_half_node",
    "shannon_norm_bracket",
    "shannon_norm_numeric",
    "sinh_error_bound",
]
