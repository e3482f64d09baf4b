"""Pydantic models for sampling configurations and window functions.

A SamplingConfig fixes the bandwidth N and the oversampling parameter; the
sampling rate L = N(1 + oversampling) follows from them. Time and frequency
windows are immutable descriptions that the evaluators in
``shannonlab.windows.time`` and ``shannonlab.windows.frequency`` interpret.
"""

import math
from enum import Enum
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SamplingConfig(BaseModel):
    """Bandwidth and oversampling of an equispaced sampling scheme.

    Attributes:
        N: Bandwidth parameter; the signal band is [-N/2, N/2].
        oversampling: Oversampling parameter lambda = (L - N) / N.
    """

    model_config = ConfigDict(frozen=True)

    N: int = Field(ge=1, description="Bandwidth parameter, band is [-N/2, N/2]")
    oversampling: float = Field(
        ge=0.0, description="Oversampling parameter lambda = (L - N) / N"
    )

    @property
    def L(self) -> float:
        """Sampling rate in samples per unit time."""
        return self.N * (1.0 + self.oversampling)

    @property
    def rounded_L(self) -> int:
        """Sampling rate rounded to the nearest integer (used for T = L + m)."""
        return int(round(self.L))


class TimeWindowKind(str, Enum):
    """Compactly supported time windows of the localized formula."""

    SINH = "sinh"
    CKB = "ckb"


class TimeWindow(BaseModel):
    """Even, compactly supported regularizer on [-m/L, m/L].

    The shape parameter is fixed to beta = pi * m * lambda / (1 + lambda).

    Attributes:
        kind: Window family.
        m: Truncation parameter; the support radius is m/L.
        config: Sampling configuration the window is tuned to.
    """

    model_config = ConfigDict(frozen=True)

    kind: TimeWindowKind = Field(description="Window family (sinh or ckb)")
    m: int = Field(ge=2, description="Truncation parameter, support radius m/L")
    config: SamplingConfig = Field(description="Sampling configuration")

    @model_validator(mode="after")
    def _check_support(self) -> Self:
        if self.config.oversampling <= 0.0:
            raise ValueError("time windows need oversampling > 0")
        if 2 * self.m > self.config.L:
            raise ValueError(
                f"support too wide: 2m = {2 * self.m} exceeds L = {self.config.L}"
            )
        return self

    @property
    def beta(self) -> float:
        """Shape parameter pi * m * (L - N) / L."""
        lam = self.config.oversampling
        return math.pi * self.m * lam / (1.0 + lam)

    @property
    def support(self) -> float:
        """Support radius m/L in time units."""
        return self.m / self.config.L


class FrequencyWindowKind(str, Enum):
    """Band-shaping frequency windows with closed-form time representations."""

    LINEAR = "linear"
    CUBIC = "cubic"
    RAISED_COSINE = "raised-cosine"
    CONV_BSPLINE2 = "conv-bspline2"


class FrequencyWindow(BaseModel):
    """Frequency window equal to 1 on [-N/2, N/2] and 0 beyond |v| >= L/2.

    Attributes:
        kind: Shape of the transition across the guard band.
        config: Sampling configuration; oversampling must be positive.
    """

    model_config = ConfigDict(frozen=True)

    kind: FrequencyWindowKind = Field(description="Transition shape")
    config: SamplingConfig = Field(description="Sampling configuration")

    @model_validator(mode="after")
    def _check_guard_band(self) -> Self:
        if self.config.oversampling <= 0.0:
            raise ValueError("frequency windows need oversampling > 0")
        return self
