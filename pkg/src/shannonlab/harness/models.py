"""Pydantic models for experiment specifications, result rows and summaries.

Every experiment has its own parameter defaults; ``ExperimentSpec.resolve``
merges command-line overrides into them and turns validation failures into
ExperimentConfigError.
"""

from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    ValidationInfo,
    field_validator,
)

from shannonlab.bounds.models import ErrorReport
from shannonlab.core.config import get_settings
from shannonlab.harness.errors import ExperimentConfigError

MAX_T_EXPONENT = 30


class ExperimentName(str, Enum):
    """Experiments the harness can run."""

    NORM = "norm"
    NONROBUSTNESS = "nonrobustness"
    FREQ_DECAY = "freq-decay"
    COMPARE = "compare"
    ROBUSTNESS = "robustness"


_T_SWEEPS = frozenset(
    {ExperimentName.NORM, ExperimentName.NONROBUSTNESS, ExperimentName.FREQ_DECAY}
)
_M_SWEEPS = frozenset({ExperimentName.COMPARE, ExperimentName.ROBUSTNESS})
_NO_OVERSAMPLING_OK = frozenset({ExperimentName.NORM, ExperimentName.NONROBUSTNESS})

EXPERIMENT_DEFAULTS: dict[ExperimentName, dict[str, Any]] = {
    ExperimentName.NORM: {
        "N": 128,
        "lambdas": (0.0, 0.5, 1.0),
        "T_exponents": tuple(range(13)),
    },
    ExperimentName.NONROBUSTNESS: {
        "N": 128,
        "lambdas": (0.0, 0.5, 1.0, 2.0),
        "T_exponents": tuple(range(13)),
        "epsilon": 1e-3,
    },
    ExperimentName.FREQ_DECAY: {
        "N": 128,
        "lambdas": (0.5, 1.0, 2.0),
        "T_exponents": tuple(range(16)),
    },
    ExperimentName.COMPARE: {
        "N": 256,
        "lambdas": (0.5, 1.0, 2.0),
        "m_values": tuple(range(2, 11)),
    },
    ExperimentName.ROBUSTNESS: {
        "N": 128,
        "lambdas": (0.5, 1.0, 2.0),
        "m_values": (2, 5, 8),
        "epsilon": 1e-3,
        "rho": 1e-3,
    },
}


def _experiment_of(info: ValidationInfo) -> ExperimentName | None:
    name = info.data.get("name")
    return name if isinstance(name, ExperimentName) else None


class ExperimentSpec(BaseModel):
    """Parameters of one experiment run.

    Attributes:
        name: Experiment to run.
        N: Bandwidth parameter.
        lambdas: Oversampling parameters to sweep.
        T_exponents: Exponents c of the truncation indices T = 2^c.
        m_values: Truncation parameters of the time windows.
        epsilon: Bound on the sample perturbations.
        rho: Standard deviation of Gaussian sample noise.
        S: Number of grid points on [-1, 1].
        seed: Seed of every random draw.
        draws: Bounded-noise draws per window (robustness only).
        trials: Gaussian-noise trials (robustness only).
        output_path: Result table destination, None for stdout.
    """

    model_config = ConfigDict(frozen=True)

    name: ExperimentName = Field(description="Experiment to run")
    N: int = Field(ge=1, description="Bandwidth parameter")
    lambdas: tuple[float, ...] = Field(description="Oversampling parameters")
    T_exponents: tuple[int, ...] = Field(
        default=(), description="Exponents c of T = 2^c"
    )
    m_values: tuple[int, ...] = Field(
        default=(), description="Time-window truncation parameters"
    )
    epsilon: float = Field(default=0.0, ge=0.0, description="Perturbation bound")
    rho: float = Field(default=0.0, ge=0.0, description="Gaussian noise deviation")
    S: int = Field(ge=2, description="Grid points on [-1, 1]")
    seed: int = Field(ge=0, description="Random seed")
    draws: int = Field(default=100, ge=1, description="Bounded-noise draws")
    trials: int = Field(default=10_000, ge=2, description="Gaussian-noise trials")
    output_path: Path | None = Field(default=None, description="Result table path")

    @field_validator("lambdas")
    @classmethod
    def _check_lambdas(
        cls, value: tuple[float, ...], info: ValidationInfo
    ) -> tuple[float, ...]:
        if not value:
            raise ValueError("at least one oversampling parameter is required")
        if any(lam < 0.0 for lam in value):
            raise ValueError("oversampling parameters must be non-negative")
        if _experiment_of(info) not in _NO_OVERSAMPLING_OK and 0.0 in value:
            raise ValueError("this experiment needs positive oversampling")
        return value

    @field_validator("T_exponents")
    @classmethod
    def _check_exponents(
        cls, value: tuple[int, ...], info: ValidationInfo
    ) -> tuple[int, ...]:
        if _experiment_of(info) in _T_SWEEPS and not value:
            raise ValueError("at least one exponent is required")
        if any(not 0 <= c <= MAX_T_EXPONENT for c in value):
            raise ValueError(f"exponents must lie in [0, {MAX_T_EXPONENT}]")
        return value

    @field_validator("m_values")
    @classmethod
    def _check_m_values(
        cls, value: tuple[int, ...], info: ValidationInfo
    ) -> tuple[int, ...]:
        if _experiment_of(info) in _M_SWEEPS and not value:
            raise ValueError("at least one truncation parameter is required")
        if any(m < 2 for m in value):
            raise ValueError("truncation parameters must be at least 2")
        N = info.data.get("N")
        lambdas = info.data.get("lambdas")
        if value and N is not None and lambdas:
            narrowest = N * (1.0 + min(lambdas))
            if 2 * max(value) > narrowest:
                raise ValueError(
                    f"2m = {2 * max(value)} exceeds the sampling rate {narrowest}"
                )
        return value

    @property
    def truncations(self) -> tuple[int, ...]:
        """Truncation indices T = 2^c in sweep order."""
        return tuple(2**c for c in self.T_exponents)

    @classmethod
    def resolve(cls, name: ExperimentName, **overrides: Any) -> "ExperimentSpec":
        """Build a spec from the experiment defaults and non-None overrides.

        Args:
            name: Experiment to run.
            **overrides: Field values; None keeps the default.

        Returns:
            The validated specification.

        Raises:
            ExperimentConfigError: If the merged parameters are invalid.
        """
        settings = get_settings()
        fields: dict[str, Any] = {
            "S": settings.grid_size,
            "seed": settings.default_seed,
            **EXPERIMENT_DEFAULTS[name],
        }
        fields.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return cls(name=name, **fields)
        except ValidationError as exc:
            first = exc.errors()[0]
            field = ".".join(str(part) for part in first["loc"]) or "spec"
            raise ExperimentConfigError(field, first["msg"]) from exc


class ResultRow(BaseModel):
    """One measured value next to its bound.

    ``lower`` is set where a quantity is checked against a two-sided
    bracket (operator norm, worst-case noise amplification). ``consistent``
    is cleared when a check across rows fails, such as the oversampling
    independence of the worst-case amplification.

    Attributes:
        experiment: Experiment that produced the row.
        window: Method or window tag.
        N: Bandwidth parameter.
        oversampling: Oversampling parameter lambda.
        param: T for truncated sums, m for time windows.
        samples_used: Samples read on [-1, 1].
        max_error: Measured value.
        bound: Upper bound, None where none applies.
        lower: Lower bound, None where none applies.
        consistent: False if a check comparing this row with others failed.
    """

    model_config = ConfigDict(frozen=True)

    experiment: ExperimentName = Field(description="Producing experiment")
    window: str = Field(description="Method or window tag")
    N: int = Field(ge=1, description="Bandwidth parameter")
    oversampling: float = Field(ge=0.0, description="Oversampling parameter")
    param: int = Field(description="T for truncated sums, m for time windows")
    samples_used: int = Field(ge=0, description="Samples read on [-1, 1]")
    max_error: float = Field(ge=0.0, description="Measured value")
    bound: float | None = Field(default=None, description="Upper bound")
    lower: float | None = Field(default=None, description="Lower bound")
    consistent: bool = Field(default=True, description="Cross-row check result")

    @property
    def passed(self) -> bool:
        """True if every bound and every cross-row check holds."""
        above = self.lower is None or self.max_error >= self.lower
        below = self.bound is None or self.max_error <= self.bound
        return above and below and self.consistent

    @property
    def sort_key(self) -> tuple[str, float, int]:
        return self.window, self.oversampling, self.param

    @classmethod
    def from_report(
        cls,
        experiment: ExperimentName,
        window: str,
        report: ErrorReport,
        samples_used: int,
        lower: float | None = None,
    ) -> "ResultRow":
        """Convert an ErrorReport into a table row."""
        return cls(
            experiment=experiment,
            window=window,
            N=report.N,
            oversampling=report.oversampling,
            param=report.param,
            samples_used=samples_used,
            max_error=report.measured_max_error,
            bound=report.bound,
            lower=lower,
        )


class SlopeCheck(BaseModel):
    """Fitted decay rate of one error sweep against its expected range.

    Attributes:
        experiment: Experiment the sweep belongs to.
        window: Method or window tag.
        oversampling: Oversampling parameter of the sweep.
        slope: Fitted slope, None if fewer than two rows qualified.
        low: Smallest accepted slope.
        high: Largest accepted slope.
        points: Number of rows in the fit.
    """

    model_config = ConfigDict(frozen=True)

    experiment: ExperimentName = Field(description="Producing experiment")
    window: str = Field(description="Method or window tag")
    oversampling: float = Field(description="Oversampling parameter")
    slope: float | None = Field(default=None, description="Fitted slope")
    low: float = Field(description="Smallest accepted slope")
    high: float = Field(description="Largest accepted slope")
    points: int = Field(ge=0, description="Rows in the fit")

    @property
    def passed(self) -> bool:
        """True if the slope lies in [low, high] or too few rows qualified."""
        return self.slope is None or self.low <= self.slope <= self.high


class RunSummary(BaseModel):
    """Outcome of one experiment run, serialized next to the result table.

    Attributes:
        experiment: Experiment that ran.
        rows: Number of result rows.
        failures: Rows whose measured value violates a bound.
        slope_checks: Decay-rate fits of the run.
        spec: Specification the run used.
    """

    model_config = ConfigDict(frozen=True)

    experiment: ExperimentName = Field(description="Experiment that ran")
    rows: int = Field(ge=0, description="Number of result rows")
    failures: int = Field(ge=0, description="Rows violating a bound")
    slope_checks: tuple[SlopeCheck, ...] = Field(
        default=(), description="Decay-rate fits"
    )
    spec: ExperimentSpec = Field(description="Specification of the run")

    @property
    def passed(self) -> bool:
        """True if every row and every slope check passed."""
        return self.failures == 0 and all(c.passed for c in self.slope_checks)
