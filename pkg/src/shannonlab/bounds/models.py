"""Pydantic models for norm brackets and measured-versus-bound reports."""

from typing import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator


class NormBracket(BaseModel):
    """Lower and upper bound on the operator norm of the T-th Shannon sum.

    Attributes:
        lower: Lower bound.
        upper: Upper bound.
        T: Truncation index.
    """

    model_config = ConfigDict(frozen=True)

    lower: float = Field(gt=0.0, description="Lower bound on the norm")
    upper: float = Field(gt=0.0, description="Upper bound on the norm")
    T: int = Field(ge=1, description="Truncation index")

    @model_validator(mode="after")
    def _check_order(self) -> Self:
        if not self.lower < self.upper:
            raise ValueError(f"lower {self.lower} must be below upper {self.upper}")
        return self

    def contains(self, value: float) -> bool:
        """Return True if ``value`` lies strictly inside the bracket."""
        return self.lower < value < self.upper


class ErrorReport(BaseModel):
    """Measured maximum error on a grid next to its theoretical bound.

    Attributes:
        method: Reconstruction method tag.
        N: Bandwidth parameter.
        oversampling: Oversampling parameter lambda.
        param: Truncation parameter (m for time windows, T otherwise).
        measured_max_error: Maximum absolute error over the grid.
        bound: Bound value, or None where no bound applies.
        grid_size: Number of grid points S.
    """

    model_config = ConfigDict(frozen=True)

    method: str = Field(description="Reconstruction method tag")
    N: int = Field(ge=1, description="Bandwidth parameter")
    oversampling: float = Field(ge=0.0, description="Oversampling parameter")
    param: int = Field(description="m for time windows, T otherwise")
    measured_max_error: float = Field(ge=0.0, description="Maximum grid error")
    bound: float | None = Field(default=None, description="Theoretical bound")
    grid_size: int = Field(ge=2, description="Number of grid points S")

    @property
    def within_bound(self) -> bool:
        """True if no bound applies or the measured error respects it."""
        return self.bound is None or self.measured_max_error <= self.bound
