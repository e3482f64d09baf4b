"""Unit tests for the frequency windows and their time representations."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from shannonlab.windows import (
    FrequencyWindow,
    FrequencyWindowKind,
    SamplingConfig,
    WindowParameterError,
    freq_window_hat,
    freq_window_time,
    lin_window_decay_bound,
)


@pytest.fixture(params=list(FrequencyWindowKind))
def window(request: pytest.FixtureRequest, config: SamplingConfig) -> FrequencyWindow:
    """Every frequency-window kind with N = 16 and L = 32."""
    return FrequencyWindow(kind=request.param, config=config)


def _inverse_by_quadrature(w: FrequencyWindow, t: float) -> float:
    half_band = 0.5 * w.config.N
    edge = 0.5 * w.config.L
    if t == 0.0:
        guard, _ = quad(
            lambda v: freq_window_hat(w, v),
            half_band,
            edge,
            epsabs=1e-11,
            epsrel=1e-11,
        )
        return 2.0 * (half_band + guard)
    omega = 2.0 * math.pi * t
    guard, _ = quad(
        lambda v: freq_window_hat(w, v),
        half_band,
        edge,
        weight="cos",
        wvar=omega,
        epsabs=1e-11,
        epsrel=1e-11,
        limit=400,
    )
    return 2.0 * (math.sin(omega * half_band) / omega + guard)


class TestFreqWindowHat:
    """Test suite for freq_window_hat."""

    def test_one_on_signal_band(self, window: FrequencyWindow) -> None:
        """Verify psi_hat = 1 on [-N/2, N/2]."""
        v = np.linspace(-8.0, 8.0, 41)
        np.testing.assert_array_equal(freq_window_hat(window, v), 1.0)

    def test_zero_beyond_band_edge(self, window: FrequencyWindow) -> None:
        """Verify psi_hat = 0 for |v| >= L/2."""
        v = np.array([16.0, 17.5, 100.0, -16.0, -40.0])
        np.testing.assert_array_equal(freq_window_hat(window, v), 0.0)

    def test_half_at_guard_band_center(self, window: FrequencyWindow) -> None:
        """Verify psi_hat((N+L)/4) = 1/2 for every kind."""
        assert freq_window_hat(window, 12.0) == pytest.approx(0.5, abs=1e-15)
        assert freq_window_hat(window, -12.0) == pytest.approx(0.5, abs=1e-15)

    def test_monotone_across_guard_band(self, window: FrequencyWindow) -> None:
        """Verify psi_hat is non-increasing in |v| and stays in [0, 1]."""
        values = freq_window_hat(window, np.linspace(0.0, 20.0, 801))
        assert np.all(np.diff(values) <= 1e-15)
        assert np.all((values >= 0.0) & (values <= 1.0))

    def test_continuous_at_band_edges(self, window: FrequencyWindow) -> None:
        """Verify the transition meets 1 at N/2 and 0 at L/2."""
        eps = 1e-9
        assert freq_window_hat(window, 8.0 + eps) == pytest.approx(1.0, abs=1e-6)
        assert freq_window_hat(window, 16.0 - eps) == pytest.approx(0.0, abs=1e-6)

    def test_linear_scalar_value(self) -> None:
        """Verify the linear ramp midpoint for N = 128 and lambda = 1."""
        config = SamplingConfig(N=128, oversampling=1.0)
        w = FrequencyWindow(kind=FrequencyWindowKind.LINEAR, config=config)
        assert freq_window_hat(w, 96.0) == 0.5


class TestFreqWindowTime:
    """Test suite for freq_window_time."""

    def test_value_at_origin(self, window: FrequencyWindow) -> None:
        """Verify psi(0) = (N+L)/2 for every kind."""
        assert freq_window_time(window, 0.0) == pytest.approx(24.0, rel=1e-14)

    @pytest.mark.parametrize("kind", list(FrequencyWindowKind))
    @pytest.mark.parametrize("N", [128, 256])
    @pytest.mark.parametrize("lam", [0.5, 1.0, 2.0])
    def test_inverse_transform_of_hat(
        self, kind: FrequencyWindowKind, N: int, lam: float
    ) -> None:
        """Verify psi against a numerical inverse transform of psi_hat."""
        w = FrequencyWindow(kind=kind, config=SamplingConfig(N=N, oversampling=lam))
        t = np.linspace(-1.0, 1.0, 101)
        expected = np.array([_inverse_by_quadrature(w, float(x)) for x in t])
        np.testing.assert_allclose(freq_window_time(w, t), expected, atol=1e-7)

    @pytest.mark.parametrize("lam", [0.25, 0.5, 1.0, 2.0])
    def test_scaled_linear_maximum(self, lam: float) -> None:
        """Verify (1/L) psi_lin peaks at t = 0 with value (2+lambda)/(2+2lambda)."""
        config = SamplingConfig(N=128, oversampling=lam)
        w = FrequencyWindow(kind=FrequencyWindowKind.LINEAR, config=config)
        peak = freq_window_time(w, 0.0) / config.L
        assert peak == pytest.approx((2.0 + lam) / (2.0 + 2.0 * lam), rel=1e-14)
        scaled = np.abs(freq_window_time(w, np.linspace(-1.0, 1.0, 4001))) / config.L
        assert float(np.max(scaled)) <= peak * (1.0 + 1e-14)

    def test_tends_to_sinc_without_oversampling(self, window: FrequencyWindow) -> None:
        """Verify (1/L) psi tends to sinc(N pi t) as lambda tends to 0."""
        config = SamplingConfig(N=16, oversampling=1e-8)
        w = FrequencyWindow(kind=window.kind, config=config)
        t = np.linspace(-2.0, 2.0, 801)
        np.testing.assert_allclose(
            freq_window_time(w, t) / config.L, np.sinc(16.0 * t), atol=1e-6
        )

    def test_cubic_near_origin(self) -> None:
        """Verify the cubic psi at t = 1e-9 stays within 1e-6 of (N+L)/2."""
        config = SamplingConfig(N=128, oversampling=1.0)
        w = FrequencyWindow(kind=FrequencyWindowKind.CUBIC, config=config)
        assert freq_window_time(w, 1e-9) == pytest.approx(192.0, abs=1e-6)

    def test_even(self, window: FrequencyWindow) -> None:
        """Verify psi(-t) = psi(t)."""
        t = np.linspace(0.0, 2.0, 57)
        np.testing.assert_allclose(
            freq_window_time(window, -t), freq_window_time(window, t), atol=1e-13
        )

    def test_removable_points_are_finite(self, window: FrequencyWindow) -> None:
        """Verify psi is finite where its closed form has removable poles."""
        t = np.array([1.0 / 16.0, 1.0 / 8.0, 1.0 / 24.0, 0.25, 1e-12])
        assert np.all(np.isfinite(freq_window_time(window, t)))

    def test_raised_cosine_near_pole(self, config: SamplingConfig) -> None:
        """Verify the raised-cosine factor is continuous at |(L-N) t| = 1."""
        w = FrequencyWindow(kind=FrequencyWindowKind.RAISED_COSINE, config=config)
        pole = 1.0 / (config.L - config.N)
        around = freq_window_time(w, pole + np.array([-1e-10, 0.0, 1e-10]))
        assert float(np.ptp(around)) < 1e-5


class TestLinearDecayBound:
    """Test suite for lin_window_decay_bound."""

    def test_envelope_holds(self, config: SamplingConfig) -> None:
        """Verify |psi_lin(x)| / L stays below the decay envelope."""
        w = FrequencyWindow(kind=FrequencyWindowKind.LINEAR, config=config)
        x = np.linspace(0.01, 3.0, 600)
        scaled = np.abs(freq_window_time(w, x)) / config.L
        bound = lin_window_decay_bound(config, x)
        assert np.all(scaled <= bound * (1.0 + 1e-12))

    def test_closed_form(self, config: SamplingConfig) -> None:
        """Verify the envelope formula at x = 1."""
        expected = 2.0 / (32.0 * 16.0 * 1.0 * math.pi**2)
        assert lin_window_decay_bound(config, 1.0) == pytest.approx(expected)

    def test_rejects_zero_oversampling(self) -> None:
        """Verify lambda = 0 raises WindowParameterError."""
        config = SamplingConfig(N=16, oversampling=0.0)
        with pytest.raises(WindowParameterError) as exc_info:
            lin_window_decay_bound(config, 1.0)
        assert exc_info.value.parameter == "oversampling"

    def test_rejects_zero_time(self, config: SamplingConfig) -> None:
        """Verify x = 0 raises WindowParameterError."""
        with pytest.raises(WindowParameterError, match="singular"):
            lin_window_decay_bound(config, np.array([0.0, 1.0]))
