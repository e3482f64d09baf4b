"""Closed-form test signals and equispaced samplers."""

import math
from typing import overload

import numpy as np

from shannonlab.core.types import FloatArray, RealInput, as_array, as_output
from shannonlab.sampling.models import BandlimitedTestFunction, SampleSet, SignalKind
from shannonlab.specfun import sinc


@overload
def eval_test_function(f: BandlimitedTestFunction, t: float) -> float: ...
@overload
def eval_test_function(f: BandlimitedTestFunction, t: FloatArray) -> FloatArray: ...
def eval_test_function(f: BandlimitedTestFunction, t: RealInput) -> RealInput:
    """Evaluate the test signal at ``t``.

    Args:
        f: Test signal description.
        t: Time value(s).

    Returns:
        Exact closed-form value(s).

    Example:
        >>> f = BandlimitedTestFunction(kind="unit-sinc", N=256)
        >>> eval_test_function(f, 0.0)
        16.0
    """
    arr = as_array(t)
    N = f.N
    if f.kind is SignalKind.UNIT_SINC:
        values = math.sqrt(N) * sinc(N * math.pi * arr)
    else:
        values = math.sqrt(4.0 * N / 5.0) * (
            sinc(N * math.pi * arr) + 0.5 * sinc(N * math.pi * (arr - 1.0))
        )
    return as_output(t, values)


def signal_l2_norm(f: BandlimitedTestFunction) -> float:
    """Return the exact L2 norm of the test signal.

    Both shapes are normalized: the sinc pair is orthogonal because the
    shift 1 is a multiple of the node spacing 1/N, and ||sinc(N pi .)||^2 = 1/N.
    The amplitudes sqrt(N) and sqrt(4N/5) cancel that factor, with
    1 + 1/4 from the pair, so every kind has norm 1.
    """
    return 1.0


def sample(f: BandlimitedTestFunction, L: float, k_min: int, k_max: int) -> SampleSet:
    """Sample ``f`` at k/L for k_min <= k <= k_max.

    Args:
        f: Test signal description.
        L: Sampling rate.
        k_min: First index (inclusive).
        k_max: Last index (inclusive).

    Returns:
        SampleSet with values f(k/L).

    Raises:
        ValueError: If L is not positive or k_min > k_max.
    """
    if L <= 0.0:
        raise ValueError(f"sampling rate must be positive, got {L}")
    if k_min > k_max:
        raise ValueError(f"empty index range [{k_min}, {k_max}]")
    nodes = np.arange(k_min, k_max + 1, dtype=np.float64) / L
    return SampleSet.from_array(L, k_min, eval_test_function(f, nodes))


def parseval_energy(samples: SampleSet) -> float:
    """Return (1/L) * sum of squared samples.

    For a bandlimited signal sampled at L >= N this tends to the squared L2
    norm as the index range grows.
    """
    values = samples.array
    return math.fsum(values * values) / samples.L
