"""Reconstruction sums for equispaced samples.

Three operators are provided: the truncated Shannon sampling sum, the
frequency-window regularized partial sum and the localized time-window
regularized formula. Long sums are accumulated over index blocks with
compensated summation, so the result does not depend on how the block
size is chosen beyond rounding.
"""

import math
from collections.abc import Callable
from typing import NamedTuple

import numpy as np

from shannonlab.core.types import (
    BoolArray,
    FloatArray,
    RealInput,
    as_array,
    as_output,
)
from shannonlab.reconstruct.errors import CoverageError
from shannonlab.sampling.models import SampleSet
from shannonlab.specfun import sinc
from shannonlab.windows.frequency import freq_window_time
from shannonlab.windows.models import FrequencyWindow, TimeWindow
from shannonlab.windows.time import time_window_eval

Kernel = Callable[[FloatArray, FloatArray], FloatArray]

BLOCK_ENTRIES = 1 << 20
NODE_SNAP_TOLERANCE = 1e-12


def _ensure_covered(samples: SampleSet, lo: int, hi: int) -> None:
    if not samples.covers(lo, hi):
        raise CoverageError(samples.k_min, samples.k_max, lo, hi)


def _window_of(samples: SampleSet, lo: int, hi: int) -> FloatArray:
    start = lo - samples.k_min
    return samples.array[start : start + hi - lo + 1]


def shifted_sinc(u: FloatArray, k: FloatArray) -> FloatArray:
    """Return the matrix sinc(pi (u_i - k_j)) for scaled times u and indices k.

    ``u`` is split into its nearest integer and a fraction in [-1/2, 1/2] so
    that sin is only ever evaluated at small arguments; this keeps the
    diagonal term accurate when u lies close to a large index.

    Args:
        u: Scaled times L t, one-dimensional.
        k: Integer-valued sample indices, one-dimensional.

    Returns:
        Array of shape (len(u), len(k)).
    """
    nearest = np.rint(u)
    frac = u - nearest
    offset = nearest[:, None] - k[None, :]
    on_node = offset == 0.0
    sign = np.where(np.fmod(offset, 2.0) == 0.0, 1.0, -1.0)
    denom = np.where(on_node, 1.0, math.pi * (offset + frac[:, None]))
    ratio = sign * np.sin(math.pi * frac)[:, None] / denom
    result: FloatArray = np.where(on_node, sinc(math.pi * frac)[:, None], ratio)
    return result


def kernel_sum(
    kernel: Kernel, x: FloatArray, k: FloatArray, weights: FloatArray
) -> FloatArray:
    """Evaluate sum_j weights_j kernel(x, k_j) with compensated block summation.

    Indices are consumed in ascending order, ``BLOCK_ENTRIES`` matrix entries
    at a time, and the block partial sums are combined with Kahan
    compensation.

    Args:
        kernel: Function mapping (x, k_block) to a (len(x), len(k_block)) matrix.
        x: Evaluation points (any shape).
        k: Sample indices in ascending order.
        weights: One weight per index.

    Returns:
        Sums with the shape of ``x``.
    """
    flat = x.ravel()
    block = max(1, BLOCK_ENTRIES // max(1, flat.size))
    total = np.zeros_like(flat)
    carry = np.zeros_like(flat)
    for start in range(0, k.size, block):
        stop = start + block
        part = kernel(flat, k[start:stop]) @ weights[start:stop]
        corrected = part - carry
        updated = total + corrected
        carry = (updated - total) - corrected
        total = updated
    return total.reshape(x.shape)


def _centered_indices(T: int) -> FloatArray:
    return np.arange(-T, T + 1, dtype=np.float64)


def shannon_partial_sum(
    samples: SampleSet, T: int, L: float, t: RealInput
) -> RealInput:
    """Evaluate the T-th Shannon sampling sum at ``t``.

    Computes sum_{k=-T}^{T} f(k/L) sinc(L pi t - k pi).

    Args:
        samples: Samples covering [-T, T].
        T: Truncation index.
        L: Sampling rate.
        t: Time value(s).

    Returns:
        The partial sum value(s).

    Raises:
        CoverageError: If the samples do not cover [-T, T].
    """
    _ensure_covered(samples, -T, T)
    values = _window_of(samples, -T, T)
    u = L * as_array(t)
    return as_output(t, kernel_sum(shifted_sinc, u, _centered_indices(T), values))


def s_T_function(T: int, L: float, t: RealInput) -> RealInput:
    """Evaluate s_T(t) = sum_{k=-T}^{T} |sinc(L pi t - k pi)|.

    Raises:
        ValueError: If T < 1.
    """
    if T < 1:
        raise ValueError(f"s_T needs T >= 1, got {T}")

    def magnitude(u: FloatArray, k: FloatArray) -> FloatArray:
        return np.abs(shifted_sinc(u, k))

    k = _centered_indices(T)
    u = L * as_array(t)
    return as_output(t, kernel_sum(magnitude, u, k, np.ones_like(k)))


def freq_regularized_sum(
    samples: SampleSet, w: FrequencyWindow, T: int, L: float, t: RealInput
) -> RealInput:
    """Evaluate the frequency-window regularized partial sum at ``t``.

    Computes sum_{k=-T}^{T} f(k/L) (1/L) psi(t - k/L). The approximation is
    not interpolating and its error is only controlled on [-1, 1].

    Args:
        samples: Samples covering [-T, T].
        w: Frequency window.
        T: Truncation index.
        L: Sampling rate.
        t: Time value(s).

    Returns:
        The partial sum value(s).

    Raises:
        CoverageError: If the samples do not cover [-T, T].
    """
    _ensure_covered(samples, -T, T)
    values = _window_of(samples, -T, T)

    def kernel(x: FloatArray, k: FloatArray) -> FloatArray:
        result: FloatArray = freq_window_time(w, x[:, None] - k[None, :] / L) / L
        return result

    arr = as_array(t)
    return as_output(t, kernel_sum(kernel, arr, _centered_indices(T), values))


def localized_indices(u: FloatArray, m: int) -> tuple[FloatArray, BoolArray]:
    """Return the candidate indices k with |k - u| <= m for each scaled time.

    Args:
        u: Scaled times L t, one-dimensional.
        m: Truncation parameter.

    Returns:
        A (len(u), 2m+1) index matrix and the boolean mask of indices that
        satisfy |k - u| <= m; each row has at most 2m+1 true entries.
    """
    base = np.ceil(u - m)
    k = base[:, None] + np.arange(2 * m + 1, dtype=np.float64)[None, :]
    inside = np.abs(k - u[:, None]) <= m
    return k, inside


class LocalizedWeights(NamedTuple):
    """Per-point weights of the localized formula.

    Attributes:
        indices: (points, 2m+1) candidate sample indices.
        mask: True where |k - L t| <= m.
        weights: sinc(L pi t - pi k) phi(t - k/L), zero outside the mask and
            a unit vector at sampling nodes.
    """

    indices: FloatArray
    mask: BoolArray
    weights: FloatArray

    def required_range(self) -> tuple[int, int]:
        """Return the smallest and largest index any point reads."""
        lo = int(np.min(np.where(self.mask, self.indices, np.inf)))
        hi = int(np.max(np.where(self.mask, self.indices, -np.inf)))
        return lo, hi

    def apply(self, samples: SampleSet) -> FloatArray:
        """Combine the weights with ``samples``.

        Raises:
            CoverageError: If a required index is missing.
        """
        lo, hi = self.required_range()
        _ensure_covered(samples, lo, hi)
        held = samples.array
        position = np.clip(
            (self.indices - samples.k_min).astype(np.int64), 0, held.size - 1
        )
        gathered = np.where(self.mask, held[position], 0.0)
        result: FloatArray = np.sum(gathered * self.weights, axis=1)
        return result


def localized_weights(w: TimeWindow, t: FloatArray) -> LocalizedWeights:
    """Compute the localized-formula weights at one-dimensional times ``t``.

    Args:
        w: Time window; its configuration fixes L and m.
        t: Non-empty one-dimensional times.

    Returns:
        LocalizedWeights for every point of ``t``.
    """
    L = w.config.L
    u = L * t
    k, inside = localized_indices(u, w.m)
    diff = u[:, None] - k
    kernel = np.where(
        inside, sinc(math.pi * diff) * time_window_eval(w, diff / L), 0.0
    )
    nearest = np.rint(u)
    on_node = np.abs(u - nearest) <= NODE_SNAP_TOLERANCE
    unit = (k == nearest[:, None]).astype(np.float64)
    weights = np.where(on_node[:, None], unit, kernel)
    return LocalizedWeights(indices=k, mask=inside, weights=weights)


def time_regularized(samples: SampleSet, w: TimeWindow, t: RealInput) -> RealInput:
    """Evaluate the localized time-window regularized formula at ``t``.

    Only the samples with |k - L t| <= m contribute, each weighted by
    sinc(L pi t - pi k) phi(t - k/L). At sampling nodes the sample value is
    returned directly.

    Args:
        samples: Samples covering every index within m of L t.
        w: Time window; its configuration fixes L and m.
        t: Time value(s).

    Returns:
        The reconstruction value(s).

    Raises:
        CoverageError: If a required index is missing.
    """
    arr = as_array(t)
    flat = arr.ravel()
    if flat.size == 0:
        return as_output(t, arr.copy())
    values = localized_weights(w, flat).apply(samples)
    return as_output(t, values.reshape(arr.shape))


def sinc_partition_sum(K: int, L: float, t: RealInput) -> RealInput:
    """Evaluate sum_{k=-K}^{K} sinc^2(L pi t - k pi), which tends to 1."""
    if K < 0:
        raise ValueError(f"partition sum needs K >= 0, got {K}")

    def squared(u: FloatArray, k: FloatArray) -> FloatArray:
        matrix = shifted_sinc(u, k)
        result: FloatArray = matrix * matrix
        return result

    k = _centered_indices(K)
    u = L * as_array(t)
    return as_output(t, kernel_sum(squared, u, k, np.ones_like(k)))


def partition_remainder_bound(K: int, L: float, t: RealInput) -> RealInput:
    """Upper bound 2 / (pi^2 (K - L|t|)) on 1 - sinc_partition_sum(K, L, t).

    Raises:
        ValueError: If K <= L|t| for some t.
    """
    reach = K - L * np.abs(as_array(t))
    if np.any(reach <= 0.0):
        raise ValueError("remainder bound needs K > L|t|")
    return as_output(t, 2.0 / (math.pi**2 * reach))


def stochastic_error(noise: SampleSet, t: RealInput) -> RealInput:
    """Propagate sample noise X_k through the Shannon sum.

    Computes sum_k X_k sinc(L pi t - k pi) over every index held by
    ``noise``. For uncorrelated zero-mean noise of variance rho^2 the
    result has variance at most rho^2.
    """
    k = noise.indices.astype(np.float64)
    u = noise.L * as_array(t)
    return as_output(t, kernel_sum(shifted_sinc, u, k, noise.array))
