"""Unit tests for sampling configurations and window models."""

import math

import pytest
from pydantic import ValidationError

from shannonlab.windows import (
    FrequencyWindow,
    FrequencyWindowKind,
    SamplingConfig,
    TimeWindow,
    TimeWindowKind,
)


class TestSamplingConfig:
    """Test suite for SamplingConfig."""

    def test_rate(self) -> None:
        """Verify L = N (1 + lambda)."""
        assert SamplingConfig(N=128, oversampling=0.5).L == 192.0

    def test_rounded_rate(self) -> None:
        """Verify the rounded rate for a non-integral L."""
        config = SamplingConfig(N=10, oversampling=0.37)
        assert config.L == pytest.approx(13.7)
        assert config.rounded_L == 14

    def test_zero_oversampling_allowed(self) -> None:
        """Verify critical sampling is a valid configuration."""
        assert SamplingConfig(N=128, oversampling=0.0).L == 128.0

    @pytest.mark.parametrize(
        ("N", "oversampling"), [(0, 1.0), (-4, 1.0), (16, -0.1)]
    )
    def test_rejects_invalid_parameters(self, N: int, oversampling: float) -> None:
        """Verify N < 1 and negative oversampling fail validation."""
        with pytest.raises(ValidationError):
            SamplingConfig(N=N, oversampling=oversampling)

    def test_frozen(self) -> None:
        """Verify the configuration is immutable."""
        config = SamplingConfig(N=16, oversampling=1.0)
        with pytest.raises(ValidationError):
            setattr(config, "N", 32)


class TestTimeWindow:
    """Test suite for TimeWindow."""

    def test_shape_parameter(self) -> None:
        """Verify beta = pi m lambda / (1 + lambda)."""
        config = SamplingConfig(N=256, oversampling=1.0)
        w = TimeWindow(kind=TimeWindowKind.SINH, m=10, config=config)
        assert w.beta == pytest.approx(5.0 * math.pi)

    def test_support(self) -> None:
        """Verify the support radius is m / L."""
        config = SamplingConfig(N=16, oversampling=1.0)
        w = TimeWindow(kind=TimeWindowKind.CKB, m=4, config=config)
        assert w.support == 0.125

    def test_kind_accepts_string_value(self) -> None:
        """Verify the window kind parses from its string value."""
        config = SamplingConfig(N=16, oversampling=1.0)
        w = TimeWindow.model_validate({"kind": "ckb", "m": 3, "config": config})
        assert w.kind is TimeWindowKind.CKB

    def test_rejects_support_wider_than_rate(self) -> None:
        """Verify 2m > L fails validation."""
        config = SamplingConfig(N=8, oversampling=0.5)
        with pytest.raises(ValidationError, match="support too wide"):
            TimeWindow(kind=TimeWindowKind.SINH, m=7, config=config)

    def test_accepts_support_equal_to_rate(self) -> None:
        """Verify 2m = L is allowed."""
        config = SamplingConfig(N=8, oversampling=0.5)
        assert TimeWindow(kind=TimeWindowKind.SINH, m=6, config=config).m == 6

    def test_rejects_zero_oversampling(self) -> None:
        """Verify time windows need oversampling."""
        config = SamplingConfig(N=64, oversampling=0.0)
        with pytest.raises(ValidationError, match="oversampling > 0"):
            TimeWindow(kind=TimeWindowKind.CKB, m=4, config=config)

    def test_rejects_m_below_two(self) -> None:
        """Verify m must be at least 2."""
        config = SamplingConfig(N=64, oversampling=1.0)
        with pytest.raises(ValidationError):
            TimeWindow(kind=TimeWindowKind.SINH, m=1, config=config)


class TestFrequencyWindow:
    """Test suite for FrequencyWindow."""

    def test_all_kinds_construct(self) -> None:
        """Verify every kind builds for positive oversampling."""
        config = SamplingConfig(N=16, oversampling=1.0)
        kinds = {
            FrequencyWindow(kind=k, config=config).kind for k in FrequencyWindowKind
        }
        assert kinds == set(FrequencyWindowKind)

    def test_rejects_zero_oversampling(self) -> None:
        """Verify frequency windows need a guard band."""
        config = SamplingConfig(N=16, oversampling=0.0)
        with pytest.raises(ValidationError, match="oversampling > 0"):
            FrequencyWindow(kind=FrequencyWindowKind.LINEAR, config=config)
