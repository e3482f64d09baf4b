"""Unit tests for test signals and equispaced sampling."""

import math

import numpy as np
import pytest

from shannonlab.sampling import (
    BandlimitedTestFunction,
    SignalKind,
    eval_test_function,
    parseval_energy,
    sample,
    signal_l2_norm,
)


class TestEvalTestFunction:
    """Test suite for eval_test_function."""

    def test_unit_sinc_peak(self, unit_sinc: BandlimitedTestFunction) -> None:
        """Verify the unit sinc equals sqrt(N) at the origin."""
        assert eval_test_function(unit_sinc, 0.0) == pytest.approx(4.0)

    def test_unit_sinc_zeros(self, unit_sinc: BandlimitedTestFunction) -> None:
        """Verify the unit sinc vanishes at nonzero multiples of 1/N."""
        t = np.array([-3.0, -1.0, 1.0, 5.0]) / 16.0
        np.testing.assert_allclose(eval_test_function(unit_sinc, t), 0.0, atol=1e-15)

    def test_shifted_pair_values(self, shifted_pair: BandlimitedTestFunction) -> None:
        """Verify the pair at the two sinc centers."""
        scale = math.sqrt(4.0 * 16.0 / 5.0)
        assert eval_test_function(shifted_pair, 0.0) == pytest.approx(scale)
        assert eval_test_function(shifted_pair, 1.0) == pytest.approx(0.5 * scale)

    def test_array_shape_preserved(self, unit_sinc: BandlimitedTestFunction) -> None:
        """Verify array input returns an array of the same shape."""
        t = np.linspace(-1.0, 1.0, 12).reshape(3, 4)
        assert eval_test_function(unit_sinc, t).shape == (3, 4)


class TestSignalNorm:
    """Test suite for signal_l2_norm and parseval_energy."""

    @pytest.mark.parametrize("kind", list(SignalKind))
    def test_unit_norm(self, kind: SignalKind) -> None:
        """Verify both signal kinds are normalized."""
        f = BandlimitedTestFunction(kind=kind, N=64)
        assert signal_l2_norm(f) == 1.0

    @pytest.mark.parametrize("kind", list(SignalKind))
    def test_parseval_energy_approaches_norm(self, kind: SignalKind) -> None:
        """Verify the sampled energy tends to the squared norm."""
        f = BandlimitedTestFunction(kind=kind, N=16)
        samples = sample(f, 32.0, -4000, 4000)
        assert parseval_energy(samples) == pytest.approx(1.0, abs=1e-3)

    def test_critical_sampling_energy_is_exact(
        self, unit_sinc: BandlimitedTestFunction
    ) -> None:
        """Verify sampling the unit sinc at L = N hits a single node."""
        samples = sample(unit_sinc, 16.0, -50, 50)
        assert parseval_energy(samples) == pytest.approx(1.0, rel=1e-12)


class TestSample:
    """Test suite for sample."""

    def test_nodes_and_range(self, unit_sinc: BandlimitedTestFunction) -> None:
        """Verify samples are taken at k/L for the requested range."""
        s = sample(unit_sinc, 32.0, -3, 4)
        assert (s.k_min, s.k_max, s.L) == (-3, 4, 32.0)
        expected = eval_test_function(unit_sinc, np.arange(-3, 5) / 32.0)
        np.testing.assert_allclose(s.array, expected, rtol=1e-15)

    def test_rejects_bad_rate(self, unit_sinc: BandlimitedTestFunction) -> None:
        """Verify a non-positive sampling rate raises ValueError."""
        with pytest.raises(ValueError, match="positive"):
            sample(unit_sinc, 0.0, 0, 1)

    def test_rejects_empty_range(self, unit_sinc: BandlimitedTestFunction) -> None:
        """Verify k_min > k_max raises ValueError."""
        with pytest.raises(ValueError, match="empty index range"):
            sample(unit_sinc, 32.0, 2, 1)
