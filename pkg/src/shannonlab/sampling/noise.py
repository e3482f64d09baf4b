"""Deterministic sample perturbations.

Random models draw from a Philox counter-based generator seeded explicitly,
so a given (model, seed) pair reproduces bit-identical perturbations on any
platform.
"""

import numpy as np

from shannonlab.core.config import get_settings
from shannonlab.core.types import FloatArray, IntArray
from shannonlab.sampling.errors import IndexRangeError
from shannonlab.sampling.models import NoiseKind, NoiseModel, SampleSet


def make_generator(seed: int | None = None) -> np.random.Generator:
    """Create a Philox-backed generator.

    Args:
        seed: Non-negative seed; the configured default is used when None.

    Returns:
        A fresh numpy Generator.
    """
    if seed is None:
        seed = get_settings().default_seed
    return np.random.Generator(np.random.Philox(seed))


def worst_case_signs(indices: IntArray) -> FloatArray:
    """Return (-1)^(k+1) sign(2k - 1) for each index k.

    The pattern is +1 at k = 0 and k = 1 and alternates away from them, so
    every term of the Shannon sum at t = 1/(2L) adds with the same sign.
    """
    k = indices.astype(np.int64)
    parity = np.where(k % 2 == 0, -1.0, 1.0)
    result: FloatArray = parity * np.sign(2 * k - 1).astype(np.float64)
    return result


def noise_vector(model: NoiseModel, indices: IntArray) -> FloatArray:
    """Draw the perturbation for each index.

    Args:
        model: Noise model.
        indices: Sample indices, in ascending order.

    Returns:
        Perturbation per index; zero outside |k| <= T for WORST_CASE_SIGN.
    """
    if model.kind is NoiseKind.WORST_CASE_SIGN:
        radius = model.T if model.T is not None else 0
        inside = np.abs(indices) <= radius
        result: FloatArray = np.where(
            inside, model.epsilon * worst_case_signs(indices), 0.0
        )
        return result
    rng = make_generator(model.seed)
    if model.kind is NoiseKind.BOUNDED_UNIFORM:
        return rng.uniform(-model.epsilon, model.epsilon, size=indices.shape)
    return rng.normal(0.0, model.rho, size=indices.shape)


def apply_noise(s: SampleSet, n: NoiseModel) -> SampleSet:
    """Return a perturbed copy of ``s``.

    Args:
        s: Clean samples.
        n: Noise model.

    Returns:
        New SampleSet with the perturbation added.

    Raises:
        IndexRangeError: If WORST_CASE_SIGN noise reaches outside the samples.
    """
    if n.kind is NoiseKind.WORST_CASE_SIGN:
        radius = n.T if n.T is not None else 0
        if not s.covers(-radius, radius):
            raise IndexRangeError(s.k_min, s.k_max, -radius, radius)
    perturbed = s.array + noise_vector(n, s.indices)
    return SampleSet.from_array(s.L, s.k_min, perturbed)
