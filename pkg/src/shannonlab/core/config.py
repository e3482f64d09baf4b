"""Library configuration using Pydantic BaseSettings.

This module provides type-safe configuration management through environment
variables with defaults that reproduce the desk-scale experiments.
"""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from environment variables.

    All settings use the SHANNONLAB_ prefix and can be overridden via
    environment variables or a local .env file.

    Attributes:
        environment: Deployment environment name.
        log_level: Minimum log level to emit.
        log_json_format: Force JSON or colored output, auto-detects if None.
        grid_size: Default number of equispaced evaluation points S.
        grid_chunk_size: Grid points evaluated per vectorized block.
        workers: Threads used to evaluate grid blocks.
        series_rel_cutoff: Default relative stop rule for power series.
        quadrature_panels: Gauss-Legendre panels for window transforms.
        default_seed: Seed used by noise models when none is given.
    """

    model_config = SettingsConfigDict(
        env_prefix="SHANNONLAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    environment: str = Field(
        default="development",
        description="Deployment environment (production, staging, development).",
    )

    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="INFO",
        description="Minimum log level to emit.",
    )

    log_json_format: bool | None = Field(
        default=None,
        description="Force JSON (true) or colored (false) output. "
        "Auto-detects based on ENVIRONMENT if not set.",
    )

    grid_size: int = Field(
        default=100_000,
        ge=2,
        description="Default number of equispaced evaluation points S.",
    )

    grid_chunk_size: int = Field(
        default=2048,
        ge=1,
        description="Grid points evaluated per vectorized block.",
    )

    workers: int = Field(
        default=1,
        ge=1,
        le=64,
        description="Threads used to evaluate grid blocks.",
    )

    series_rel_cutoff: float = Field(
        default=1e-17,
        gt=0.0,
        lt=1.0,
        description="Relative stop rule for Bessel and Struve power series.",
    )

    quadrature_panels: int = Field(
        default=64,
        ge=1,
        description="Gauss-Legendre panels for window Fourier transforms.",
    )

    default_seed: int = Field(
        default=20240101,
        ge=0,
        description="Seed used by noise models when none is given.",
    )

    def get_effective_log_json_format(self) -> bool:
        """Determine effective JSON format setting.

        Returns JSON format if explicitly set via LOG_JSON_FORMAT, otherwise
        auto-detects based on ENVIRONMENT value (production=JSON, else colored).

        Returns:
            True for JSON output, False for colored console output.
        """
        if self.log_json_format is not None:
            return self.log_json_format
        return self.environment == "production"


@lru_cache
def get_settings() -> Settings:
    """Retrieve cached settings.

    Returns:
        Validated Settings instance.
    """
    return Settings()
