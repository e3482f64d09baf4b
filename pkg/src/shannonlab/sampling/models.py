"""Pydantic models for test signals, sample sets and noise models."""

from enum import Enum
from functools import cached_property
from typing import Annotated, Self

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PlainSerializer,
    PlainValidator,
    model_validator,
)

from shannonlab.core.types import FloatArray, IntArray


class SignalKind(str, Enum):
    """Bandlimited test signals with unit L2 norm."""

    UNIT_SINC = "unit-sinc"
    SHIFTED_PAIR = "shifted-pair"


class BandlimitedTestFunction(BaseModel):
    """Closed-form bandlimited test signal with band [-N/2, N/2].

    UNIT_SINC is sqrt(N) sinc(N pi t). SHIFTED_PAIR is
    sqrt(4N/5) (sinc(N pi t) + sinc(N pi (t - 1)) / 2). Both have unit norm.

    Attributes:
        kind: Signal shape.
        N: Bandwidth parameter.
    """

    model_config = ConfigDict(frozen=True)

    kind: SignalKind = Field(description="Signal shape")
    N: int = Field(ge=1, description="Bandwidth parameter")


def _readonly_values(value: object) -> FloatArray:
    arr = np.array(value, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError("sample values must be one-dimensional")
    arr.setflags(write=False)
    return arr


SampleValues = Annotated[
    FloatArray,
    PlainValidator(_readonly_values),
    PlainSerializer(lambda arr: arr.tolist(), return_type=list[float]),
]


class SampleSet(BaseModel):
    """Equispaced samples f(k/L) for a contiguous index range.

    Values are held as one read-only float64 array, so large sets are not
    validated element by element.

    Attributes:
        L: Sampling rate.
        k_min: First sample index (inclusive).
        k_max: Last sample index (inclusive).
        values: Sample values, one per index from k_min to k_max.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    L: float = Field(gt=0.0, description="Sampling rate")
    k_min: int = Field(description="First sample index, inclusive")
    k_max: int = Field(description="Last sample index, inclusive")
    values: SampleValues = Field(description="Sample values f(k/L)")

    @model_validator(mode="after")
    def _check_values(self) -> Self:
        expected = self.k_max - self.k_min + 1
        if expected < 1:
            raise ValueError(f"empty index range [{self.k_min}, {self.k_max}]")
        if self.values.size != expected:
            raise ValueError(
                f"expected {expected} values for [{self.k_min}, {self.k_max}], "
                f"got {self.values.size}"
            )
        if not np.all(np.isfinite(self.values)):
            raise ValueError("sample values must be finite")
        return self

    @classmethod
    def from_array(cls, L: float, k_min: int, values: FloatArray) -> "SampleSet":
        """Build a sample set from a numpy array starting at ``k_min``."""
        return cls(L=L, k_min=k_min, k_max=k_min + len(values) - 1, values=values)

    @property
    def array(self) -> FloatArray:
        """Sample values as a read-only float64 array."""
        return self.values

    @cached_property
    def indices(self) -> IntArray:
        """Sample indices k_min..k_max as an int64 array."""
        return np.arange(self.k_min, self.k_max + 1, dtype=np.int64)

    def covers(self, lo: int, hi: int) -> bool:
        """Return True if every index in [lo, hi] is held."""
        return self.k_min <= lo and hi <= self.k_max

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SampleSet):
            return NotImplemented
        return (
            (self.L, self.k_min, self.k_max) == (other.L, other.k_min, other.k_max)
            and bool(np.array_equal(self.values, other.values))
        )

    def __len__(self) -> int:
        return self.k_max - self.k_min + 1


class NoiseKind(str, Enum):
    """Sample perturbation models."""

    WORST_CASE_SIGN = "worst-case-sign"
    BOUNDED_UNIFORM = "bounded-uniform"
    ZERO_MEAN_GAUSSIAN = "zero-mean-gaussian"


class NoiseModel(BaseModel):
    """Perturbation applied to a sample set.

    WORST_CASE_SIGN adds epsilon (-1)^(k+1) sign(2k - 1) for |k| <= T.
    BOUNDED_UNIFORM adds i.i.d. uniform noise on [-epsilon, epsilon] and
    ZERO_MEAN_GAUSSIAN adds i.i.d. normal noise with deviation rho.

    Attributes:
        kind: Perturbation model.
        epsilon: Amplitude bound for the sign and uniform models.
        rho: Standard deviation for the Gaussian model.
        T: Affected index radius, required for WORST_CASE_SIGN.
        seed: RNG seed; the configured default is used when None.
    """

    model_config = ConfigDict(frozen=True)

    kind: NoiseKind = Field(description="Perturbation model")
    epsilon: float = Field(default=0.0, ge=0.0, description="Amplitude bound")
    rho: float = Field(default=0.0, ge=0.0, description="Standard deviation")
    T: int | None = Field(default=None, ge=0, description="Affected index radius")
    seed: int | None = Field(default=None, ge=0, description="RNG seed")

    @model_validator(mode="after")
    def _check_radius(self) -> Self:
        if self.kind is NoiseKind.WORST_CASE_SIGN and self.T is None:
            raise ValueError("worst-case-sign noise needs an index radius T")
        return self
