"""Test signals, equispaced sampling and deterministic noise models.

Example:
    >>> from shannonlab.sampling import BandlimitedTestFunction, sample
    >>> f = BandlimitedTestFunction(kind="unit-sinc", N=4)
    >>> sample(f, 4.0, 0, 0).values.tolist()
    [2.0]
"""

from shannonlab.sampling.errors import (
    IndexRangeError,
    SampleFormatError,
    SamplingError,
)
from shannonlab.sampling.io import read_sample_set, write_sample_set
from shannonlab.sampling.models import (
    BandlimitedTestFunction,
    NoiseKind,
    NoiseModel,
    SampleSet,
    SignalKind,
)
from shannonlab.sampling.noise import (
    apply_noise,
    make_generator,
    noise_vector,
    worst_case_signs,
)
from shannonlab.sampling.signals import (
    eval_test_function,
    parseval_energy,
    sample,
    signal_l2_norm,
)

__all__ = [
    "BandlimitedTestFunction",
    "IndexRangeError",
    "NoiseKind",
    "NoiseModel",
    "SampleFormatError",
    "SampleSet",
    "SamplingError",
    "SignalKind",
    "apply_noise",
    "eval_test_function",
    "make_generator",
    "noise_vector",
    "parseval_energy",
    "read_sample_set",
    "sample",
    "signal_l2_norm",
    "worst_case_signs",
    "write_sample_set",
]
