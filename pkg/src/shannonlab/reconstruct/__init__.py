"""Reconstruction operators and grid evaluation.

Example:
    >>> from shannonlab.reconstruct import ClassicalShannon, Reconstructor
    >>> from shannonlab.sampling import BandlimitedTestFunction, sample
    >>> f = BandlimitedTestFunction(kind="unit-sinc", N=4)
    >>> r = Reconstructor(method=ClassicalShannon(T=8), samples=sample(f, 4.0, -8, 8))
    >>> r.samples_used
    17
"""

from shannonlab.reconstruct.errors import CoverageError, ReconstructionError
from shannonlab.reconstruct.grid import (
    GridEvaluator,
    equispaced_grid,
    evaluate_on_grid,
    max_abs_error,
)
from shannonlab.reconstruct.models import (
    ClassicalShannon,
    FrequencyReg,
    ReconstructionMethod,
    Reconstructor,
    TimeReg,
)
from shannonlab.reconstruct.operators import (
    LocalizedWeights,
    freq_regularized_sum,
    kernel_sum,
    localized_indices,
    localized_weights,
    partition_remainder_bound,
    s_T_function,
    shannon_partial_sum,
    shifted_sinc,
    sinc_partition_sum,
    stochastic_error,
    time_regularized,
)

__all__ = [
    "ClassicalShannon",
    "CoverageError",
    "FrequencyReg",
    "GridEvaluator",
    "LocalizedWeights",
    "ReconstructionError",
    "ReconstructionMethod",
    "Reconstructor",
    "TimeReg",
    "equispaced_grid",
    "evaluate_on_grid",
    "freq_regularized_sum",
    "kernel_sum",
    "localized_indices",
    "localized_weights",
    "max_abs_error",
    "partition_remainder_bound",
    "s_T_function",
    "shannon_partial_sum",
    "shifted_sinc",
    "sinc_partition_sum",
    "stochastic_error",
    "time_regularized",
]
