"""Reconstructor model binding a sample set to one reconstruction method."""

import math
from typing import Annotated, Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from shannonlab.core.types import FloatArray, RealInput, as_array
from shannonlab.reconstruct.operators import (
    freq_regularized_sum,
    shannon_partial_sum,
    time_regularized,
)
from shannonlab.sampling.models import SampleSet
from shannonlab.windows.models import FrequencyWindow, TimeWindow


class ClassicalShannon(BaseModel):
    """Truncated Shannon sampling sum over |k| <= T."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["classical"] = "classical"
    T: int = Field(ge=0, description="Truncation index")


class FrequencyReg(BaseModel):
    """Frequency-window regularized partial sum over |k| <= T."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["frequency"] = "frequency"
    window: FrequencyWindow = Field(description="Frequency window")
    T: int = Field(ge=0, description="Truncation index")


class TimeReg(BaseModel):
    """Localized time-window regularized formula."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["time"] = "time"
    window: TimeWindow = Field(description="Time window")


ReconstructionMethod = Annotated[
    ClassicalShannon | FrequencyReg | TimeReg, Field(discriminator="kind")
]


class Reconstructor(BaseModel):
    """A reconstruction method applied to a fixed sample set.

    Attributes:
        method: Which sum to evaluate and its parameters.
        samples: The (possibly perturbed) samples.
    """

    model_config = ConfigDict(frozen=True)

    method: ReconstructionMethod = Field(description="Reconstruction method")
    samples: SampleSet = Field(description="Equispaced samples")

    @model_validator(mode="after")
    def _check_rate(self) -> Self:
        method = self.method
        if isinstance(method, (FrequencyReg, TimeReg)):
            rate = method.window.config.L
            if not math.isclose(rate, self.samples.L, rel_tol=1e-12):
                raise ValueError(
                    f"window rate L={rate} differs from sample rate "
                    f"L={self.samples.L}"
                )
        return self

    def required_indices(
        self, t_lo: float = -1.0, t_hi: float = 1.0
    ) -> tuple[int, int]:
        """Return the index range needed to evaluate on [t_lo, t_hi]."""
        method = self.method
        if isinstance(method, TimeReg):
            L = self.samples.L
            m = method.window.m
            return math.ceil(L * t_lo - m), math.floor(L * t_hi + m)
        return -method.T, method.T

    @property
    def samples_used(self) -> int:
        """Number of distinct samples the method reads on [-1, 1].

        This is 2T + 1 for the truncated sums and 2m + 2L + 1 for the
        localized formula with integral L.
        """
        lo, hi = self.required_indices()
        return hi - lo + 1

    def evaluate(self, t: RealInput) -> RealInput:
        """Evaluate the reconstruction at ``t``.

        Raises:
            CoverageError: If the samples miss a required index.
        """
        method = self.method
        samples = self.samples
        if isinstance(method, ClassicalShannon):
            return shannon_partial_sum(samples, method.T, samples.L, t)
        if isinstance(method, FrequencyReg):
            return freq_regularized_sum(samples, method.window, method.T, samples.L, t)
        return time_regularized(samples, method.window, t)

    def evaluate_array(self, t: FloatArray) -> FloatArray:
        """Evaluate at an array of times and always return an array."""
        return as_array(self.evaluate(as_array(t)))
