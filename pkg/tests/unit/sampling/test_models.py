"""Unit tests for sampling models."""

import numpy as np
import pytest
from pydantic import ValidationError

from shannonlab.sampling import (
    BandlimitedTestFunction,
    NoiseKind,
    NoiseModel,
    SampleSet,
    SignalKind,
)


class TestBandlimitedTestFunction:
    """Test suite for BandlimitedTestFunction."""

    def test_kind_accepts_string_value(self) -> None:
        """Verify the kind field parses its string value."""
        f = BandlimitedTestFunction.model_validate({"kind": "shifted-pair", "N": 8})
        assert f.kind is SignalKind.SHIFTED_PAIR

    def test_rejects_zero_bandwidth(self) -> None:
        """Verify N must be positive."""
        with pytest.raises(ValidationError):
            BandlimitedTestFunction(kind=SignalKind.UNIT_SINC, N=0)

    def test_is_frozen(self) -> None:
        """Verify instances are immutable."""
        f = BandlimitedTestFunction(kind=SignalKind.UNIT_SINC, N=8)
        with pytest.raises(ValidationError):
            setattr(f, "N", 16)


class TestSampleSet:
    """Test suite for SampleSet."""

    def test_from_array(self) -> None:
        """Verify from_array derives k_max from the value count."""
        s = SampleSet.from_array(32.0, -2, np.array([0.5, 1.0, 1.5, 2.0]))
        assert s.k_min == -2
        assert s.k_max == 1
        assert len(s) == 4
        np.testing.assert_array_equal(s.values, [0.5, 1.0, 1.5, 2.0])

    def test_values_are_a_readonly_copy(self) -> None:
        """Verify values are held as one read-only float64 array."""
        source = np.array([1.0, 2.0, 3.0])
        s = SampleSet.from_array(8.0, 0, source)
        source[0] = 99.0
        assert isinstance(s.values, np.ndarray)
        assert s.values.dtype == np.float64
        assert s.values[0] == 1.0
        assert not s.values.flags.writeable
        assert s.array is s.values

    def test_large_set_from_array(self) -> None:
        """Verify a million samples are accepted as one array."""
        s = SampleSet.from_array(8.0, -500_000, np.zeros(1_000_000))
        assert len(s) == 1_000_000
        assert s.k_max == 499_999

    def test_rejects_two_dimensional_values(self) -> None:
        """Verify values must form a single row."""
        with pytest.raises(ValidationError, match="one-dimensional"):
            SampleSet(L=8.0, k_min=0, k_max=3, values=np.zeros((2, 2)))

    def test_equality_compares_values(self) -> None:
        """Verify sets with equal fields compare equal."""
        a = SampleSet(L=8.0, k_min=0, k_max=1, values=np.array([1.0, 2.0]))
        b = SampleSet.from_array(8.0, 0, np.array([1.0, 2.0]))
        c = SampleSet.from_array(8.0, 0, np.array([1.0, 2.5]))
        assert a == b
        assert a != c

    def test_dump_lists_values(self) -> None:
        """Verify serialization turns the array into a list."""
        s = SampleSet(L=8.0, k_min=0, k_max=1, values=np.array([1.0, 2.0]))
        assert s.model_dump()["values"] == [1.0, 2.0]

    def test_array_and_indices(self) -> None:
        """Verify the cached array views."""
        s = SampleSet(L=8.0, k_min=3, k_max=5, values=np.array([1.0, 2.0, 3.0]))
        np.testing.assert_array_equal(s.indices, [3, 4, 5])
        np.testing.assert_array_equal(s.array, [1.0, 2.0, 3.0])
        assert s.array.dtype == np.float64
        assert not s.array.flags.writeable

    def test_covers(self) -> None:
        """Verify covers checks both range ends."""
        s = SampleSet(L=8.0, k_min=-3, k_max=3, values=np.zeros(7))
        assert s.covers(-3, 3)
        assert s.covers(0, 1)
        assert not s.covers(-4, 0)
        assert not s.covers(0, 4)

    def test_rejects_length_mismatch(self) -> None:
        """Verify the value count must match the index range."""
        with pytest.raises(ValidationError, match="expected 3 values"):
            SampleSet(L=8.0, k_min=0, k_max=2, values=np.array([1.0, 2.0]))

    def test_rejects_empty_range(self) -> None:
        """Verify k_max below k_min is rejected."""
        with pytest.raises(ValidationError, match="empty index range"):
            SampleSet(L=8.0, k_min=2, k_max=1, values=np.empty(0))

    def test_rejects_non_finite_values(self) -> None:
        """Verify NaN and infinity are rejected."""
        with pytest.raises(ValidationError, match="finite"):
            SampleSet(L=8.0, k_min=0, k_max=1, values=np.array([1.0, np.nan]))

    def test_rejects_non_positive_rate(self) -> None:
        """Verify L must be positive."""
        with pytest.raises(ValidationError):
            SampleSet(L=0.0, k_min=0, k_max=0, values=np.array([1.0]))


class TestNoiseModel:
    """Test suite for NoiseModel."""

    def test_defaults(self) -> None:
        """Verify zero amplitudes and no seed by default."""
        model = NoiseModel(kind=NoiseKind.BOUNDED_UNIFORM)
        assert model.epsilon == 0.0
        assert model.rho == 0.0
        assert model.seed is None

    def test_worst_case_needs_radius(self) -> None:
        """Verify WORST_CASE_SIGN without T is rejected."""
        with pytest.raises(ValidationError, match="index radius"):
            NoiseModel(kind=NoiseKind.WORST_CASE_SIGN, epsilon=1e-3)

    def test_rejects_negative_amplitudes(self) -> None:
        """Verify negative epsilon and rho are rejected."""
        with pytest.raises(ValidationError):
            NoiseModel(kind=NoiseKind.BOUNDED_UNIFORM, epsilon=-1.0)
        with pytest.raises(ValidationError):
            NoiseModel(kind=NoiseKind.ZERO_MEAN_GAUSSIAN, rho=-1.0)
