"""Unit tests for the special-function evaluators."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import special
from scipy.integrate import quad

from shannonlab.specfun import (
    EULER_GAMMA,
    GAMMA_TERM,
    SeriesOverflowError,
    SeriesTolerance,
    bessel_i0,
    bessel_struve_difference,
    ckb_bracket,
    harmonic,
    odd_harmonic,
    sinc,
    sine_integral,
    struve_l0,
)

finite_reals = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)


class TestSinc:
    """Test suite for sinc."""

    def test_value_at_zero(self) -> None:
        """Verify sinc(0) is exactly one."""
        assert sinc(0.0) == 1.0

    def test_zero_at_pi(self) -> None:
        """Verify sinc vanishes at pi up to rounding."""
        assert abs(sinc(math.pi)) < 1e-16

    def test_half_pi(self) -> None:
        """Verify sinc(pi/2) = 2/pi."""
        assert sinc(0.5 * math.pi) == pytest.approx(2.0 / math.pi, rel=1e-15)

    def test_taylor_branch_matches_quotient(self) -> None:
        """Verify the small-argument branch agrees with sin(x)/x."""
        for x in (1e-3, 2e-4, 1.0001e-4):
            assert sinc(x) == pytest.approx(math.sin(x) / x, rel=1e-15)
        assert sinc(5e-5) == pytest.approx(1.0 - 5e-5**2 / 6.0, rel=1e-16)

    def test_array_input_returns_array(self) -> None:
        """Verify array input keeps its shape."""
        x = np.array([[0.0, math.pi], [1.0, -1.0]])
        result = sinc(x)
        assert isinstance(result, np.ndarray)
        assert result.shape == (2, 2)
        np.testing.assert_allclose(result, np.sinc(x / math.pi), atol=1e-16)

    @given(finite_reals)
    def test_even_and_bounded(self, x: float) -> None:
        """Verify sinc is even and bounded by one in magnitude."""
        assert sinc(x) == sinc(-x)
        assert abs(sinc(x)) <= 1.0


class TestBesselI0:
    """Test suite for the modified Bessel function I0."""

    def test_value_at_zero(self) -> None:
        """Verify I0(0) = 1."""
        assert bessel_i0(0.0) == 1.0

    def test_value_at_pi(self) -> None:
        """Verify I0(pi) against the reference value."""
        assert bessel_i0(math.pi) == pytest.approx(5.4779, abs=1e-4)

    def test_kaiser_bessel_constant(self) -> None:
        """Verify e^pi / (pi (I0(pi) - 1)) = 1.644967."""
        value = math.exp(math.pi) / (math.pi * (bessel_i0(math.pi) - 1.0))
        assert value == pytest.approx(1.644967, abs=1e-6)

    def test_matches_scipy(self) -> None:
        """Verify agreement with scipy on [0, 100]."""
        x = np.linspace(0.0, 100.0, 401)
        np.testing.assert_allclose(bessel_i0(x), special.i0(x), rtol=1e-12)

    def test_even(self) -> None:
        """Verify I0 is even."""
        x = np.linspace(0.0, 30.0, 61)
        np.testing.assert_array_equal(bessel_i0(x), bessel_i0(-x))

    def test_increasing_and_at_least_one(self) -> None:
        """Verify I0 >= 1 and increasing on [0, 50]."""
        values = bessel_i0(np.linspace(0.0, 50.0, 501))
        assert np.all(values >= 1.0)
        assert np.all(np.diff(values) > 0.0)

    def test_scaled_bessel_decreasing(self) -> None:
        """Verify e^(-x) I0(x) is strictly decreasing on [0, 50]."""
        x = np.linspace(0.0, 50.0, 501)
        assert np.all(np.diff(np.exp(-x) * bessel_i0(x)) < 0.0)

    def test_shifted_ratio_decreasing_beyond_pi(self) -> None:
        """Verify e^x / (x (I0(x) - 1)) is decreasing on [pi, 50]."""
        x = np.linspace(math.pi, 50.0, 400)
        ratio = np.exp(x) / (x * (bessel_i0(x) - 1.0))
        assert np.all(np.diff(ratio) < 0.0)

    def test_overflow_guard(self) -> None:
        """Verify arguments beyond 700 raise SeriesOverflowError."""
        with pytest.raises(SeriesOverflowError) as exc_info:
            bessel_i0(np.array([1.0, -701.0]))
        assert exc_info.value.function == "bessel_i0"
        assert exc_info.value.x == -701.0
        assert exc_info.value.limit == 700.0

    def test_looser_tolerance_stays_close(self) -> None:
        """Verify a coarser stop rule still gives a close value."""
        coarse = bessel_i0(10.0, tolerance=SeriesTolerance(rel_cutoff=1e-8))
        assert coarse == pytest.approx(special.i0(10.0), rel=1e-7)


class TestStruveL0:
    """Test suite for the modified Struve function L0."""

    def test_value_at_zero(self) -> None:
        """Verify L0(0) = 0."""
        assert struve_l0(0.0) == 0.0

    def test_matches_quadrature_at_two(self) -> None:
        """Verify L0(2) against (2/pi) integral of sinh(2 cos s)."""
        reference, _ = quad(lambda s: math.sinh(2.0 * math.cos(s)), 0.0, math.pi / 2)
        assert struve_l0(2.0) == pytest.approx(2.0 / math.pi * reference, rel=1e-10)

    def test_matches_scipy(self) -> None:
        """Verify agreement with scipy on [0, 40]."""
        x = np.linspace(0.0, 40.0, 161)
        np.testing.assert_allclose(
            struve_l0(x), special.modstruve(0, x), rtol=1e-9
        )

    def test_odd(self) -> None:
        """Verify L0 is odd."""
        x = np.linspace(0.0, 20.0, 41)
        np.testing.assert_array_equal(struve_l0(-x), -struve_l0(x))


class TestBesselStruveDifference:
    """Test suite for the cancellation-free I0 - L0."""

    def test_value_at_zero(self) -> None:
        """Verify I0(0) - L0(0) = 1."""
        assert bessel_struve_difference(0.0) == pytest.approx(1.0, rel=1e-15)

    def test_matches_series_difference_for_small_arguments(self) -> None:
        """Verify agreement with the direct difference where it is accurate."""
        x = np.linspace(0.0, 5.0, 51)
        np.testing.assert_allclose(
            bessel_struve_difference(x), bessel_i0(x) - struve_l0(x), rtol=1e-12
        )

    def test_matches_scipy_difference(self) -> None:
        """Verify agreement with scipy's I0 - L0 on [0, 10]."""
        x = np.linspace(0.0, 10.0, 41)
        expected = special.i0(x) - special.modstruve(0, x)
        np.testing.assert_allclose(bessel_struve_difference(x), expected, rtol=1e-7)

    def test_positive_and_decreasing(self) -> None:
        """Verify I0 - L0 is positive and decreasing on [0, 200]."""
        values = bessel_struve_difference(np.linspace(0.0, 200.0, 401))
        assert np.all(values > 0.0)
        assert np.all(np.diff(values) < 0.0)

    def test_large_argument_asymptotics(self) -> None:
        """Verify I0(x) - L0(x) approaches 2/(pi x) for large x."""
        x = 400.0
        assert bessel_struve_difference(x) == pytest.approx(
            2.0 / (math.pi * x), rel=1e-4
        )


class TestSineIntegral:
    """Test suite for the sine integral."""

    def test_value_at_zero(self) -> None:
        """Verify Si(0) = 0."""
        assert sine_integral(0.0) == 0.0

    def test_value_at_pi(self) -> None:
        """Verify Si(pi) against adaptive quadrature."""
        reference, _ = quad(lambda w: math.sin(w) / w, 0.0, math.pi)
        assert sine_integral(math.pi) == pytest.approx(reference, rel=1e-12)
        assert sine_integral(math.pi) == pytest.approx(1.851937, abs=1e-6)

    def test_far_tail(self) -> None:
        """Verify Si(1000) lies within 2e-3 of pi/2."""
        assert abs(sine_integral(1000.0) - 0.5 * math.pi) < 2e-3

    def test_matches_scipy_across_branches(self) -> None:
        """Verify agreement with scipy on both sides of each branch switch."""
        switches = np.array([15.999, 16.0, 16.001, 31.999, 32.0, 32.001])
        x = np.concatenate([np.linspace(-60.0, 60.0, 481), switches, -switches])
        np.testing.assert_allclose(
            sine_integral(x), special.sici(x)[0], rtol=0, atol=1e-9
        )

    def test_tail_bound(self) -> None:
        """Verify |Si(x) - pi/2| <= 2/x on [10, 1000]."""
        x = np.linspace(10.0, 1000.0, 500)
        assert np.all(np.abs(sine_integral(x) - 0.5 * math.pi) <= 2.0 / x)

    @given(st.floats(min_value=-200.0, max_value=200.0, allow_nan=False))
    def test_odd(self, x: float) -> None:
        """Verify Si is odd."""
        assert sine_integral(-x) == -sine_integral(x)


class TestHarmonicNumbers:
    """Test suite for harmonic and odd harmonic sums."""

    def test_small_values(self) -> None:
        """Verify H_1 = 1 and H_4 = 25/12."""
        assert harmonic(1) == 1.0
        assert harmonic(4) == pytest.approx(25.0 / 12.0, rel=1e-15)

    @pytest.mark.parametrize("T", [1, 10, 100, 1_000, 10_000, 100_000, 1_000_000])
    def test_euler_gamma_bracket(self, T: int) -> None:
        """Verify 1/(2T+2) < H_T - ln T - gamma < 1/(2T)."""
        excess = harmonic(T) - math.log(T) - EULER_GAMMA
        assert 1.0 / (2 * T + 2) < excess < 1.0 / (2 * T)

    @pytest.mark.parametrize("T", [1, 2, 7, 100, 4096])
    def test_odd_harmonic_identity(self, T: int) -> None:
        """Verify sum 1/(2k-1) = H_2T - H_T / 2."""
        expected = harmonic(2 * T) - 0.5 * harmonic(T)
        assert odd_harmonic(T) == pytest.approx(expected, rel=1e-14)

    def test_rejects_non_positive(self) -> None:
        """Verify T < 1 raises ValueError."""
        with pytest.raises(ValueError, match="T >= 1"):
            harmonic(0)
        with pytest.raises(ValueError, match="T >= 1"):
            odd_harmonic(0)

    def test_gamma_term_constant(self) -> None:
        """Verify (4/pi) ln 2 + 2 gamma / pi = 1.2500093."""
        assert GAMMA_TERM == pytest.approx(1.2500093, abs=1e-7)


class TestCkbBracket:
    """Test suite for the Kaiser-Bessel error bracket."""

    def test_inside_unit_interval(self) -> None:
        """Verify the bracket lies in (0, 1) for beta in [1, 40]."""
        values = ckb_bracket(np.linspace(1.0, 40.0, 391))
        assert np.all(values > 0.0)
        assert np.all(values < 1.0)

    def test_pi_and_ten(self) -> None:
        """Verify the bracket at pi and at 10 lies in (0, 1)."""
        assert 0.0 < ckb_bracket(math.pi) < 1.0
        assert 0.0 < ckb_bracket(10.0) < 1.0

    def test_vanishes_towards_zero(self) -> None:
        """Verify the bracket tends to zero as beta tends to zero."""
        assert ckb_bracket(1e-8) == pytest.approx(0.0, abs=1e-7)

    def test_rejects_non_positive_beta(self) -> None:
        """Verify beta <= 0 raises ValueError."""
        with pytest.raises(ValueError, match="beta > 0"):
            ckb_bracket(0.0)
