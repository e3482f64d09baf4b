"""Pydantic models for special-function evaluation settings."""

from pydantic import BaseModel, ConfigDict, Field

from shannonlab.core.config import get_settings


class SeriesTolerance(BaseModel):
    """Stop rule for positive-term power series.

    Summation stops once the next term falls below ``rel_cutoff`` times the
    partial sum.

    Attributes:
        rel_cutoff: Dimensionless relative cutoff in (0, 1).
    """

    model_config = ConfigDict(frozen=True)

    rel_cutoff: float = Field(
        default=1e-17,
        gt=0.0,
        lt=1.0,
        description="Relative term-to-sum ratio that ends the summation",
    )

    @classmethod
    def from_settings(cls) -> "SeriesTolerance":
        """Build the tolerance configured via SHANNONLAB_SERIES_REL_CUTOFF."""
        return cls(rel_cutoff=get_settings().series_rel_cutoff)


DEFAULT_TOLERANCE = SeriesTolerance()
