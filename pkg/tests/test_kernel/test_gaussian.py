"""Tests for the standard normal CDF, PDF and quantile."""

import math

import pytest
from hypothesis import given, strategies as st

from netcascade.errors import DomainError
from netcascade.kernel import INV_SQRT_2PI, std_normal_cdf, std_normal_pdf, std_normal_quantile


class TestStdNormalCdf:
    """Test cases for std_normal_cdf."""

    def test_median(self) -> None:
        """Test that N(0) is exactly one half."""
        assert std_normal_cdf(0.0) == 0.5

    def test_reflection(self) -> None:
        """Test N(x) + N(-x) = 1."""
        assert std_normal_cdf(1.7) + std_normal_cdf(-1.7) == pytest.approx(1.0, abs=1e-14)

    def test_upper_quantile(self) -> None:
        """Test the 97.5% point."""
        assert std_normal_cdf(1.959964) == pytest.approx(0.975, abs=1e-6)

    def test_deep_tail_keeps_relative_precision(self) -> None:
        """Test that N(-8) is resolved rather than rounded to zero."""
        assert std_normal_cdf(-8.0) == pytest.approx(6.220960574271785e-16, rel=1e-10)

    @given(
        x1=st.floats(min_value=-8.0, max_value=8.0),
        x2=st.floats(min_value=-8.0, max_value=8.0),
    )
    def test_monotone(self, x1: float, x2: float) -> None:
        """Property test: N is nondecreasing."""
        lo, hi = sorted((x1, x2))
        assert std_normal_cdf(lo) <= std_normal_cdf(hi)

    @pytest.mark.parametrize("value", [math.nan, math.inf, -math.inf])
    def test_non_finite_rejected(self, value: float) -> None:
        """Test that non-finite input raises DomainError."""
        with pytest.raises(DomainError, match="finite"):
            std_normal_cdf(value)


class TestStdNormalPdf:
    """Test cases for std_normal_pdf."""

    def test_peak(self) -> None:
        """Test phi(0) = 1/sqrt(2 pi)."""
        assert std_normal_pdf(0.0) == pytest.approx(0.3989422804, abs=1e-9)
        assert std_normal_pdf(0.0) == INV_SQRT_2PI

    def test_at_one(self) -> None:
        """Test phi(1)."""
        assert std_normal_pdf(1.0) == pytest.approx(0.2419707245, abs=1e-9)

    def test_even(self) -> None:
        """Test phi(x) = phi(-x)."""
        assert std_normal_pdf(2.3) == std_normal_pdf(-2.3)

    @pytest.mark.parametrize("x", [step / 4.0 for step in range(-20, 21)])
    def test_central_difference_of_cdf(self, x: float) -> None:
        """Test (N(x + h) - N(x - h)) / 2h matches phi(x) to 1e-6 on [-5, 5]."""
        step = 1e-5
        numeric = (std_normal_cdf(x + step) - std_normal_cdf(x - step)) / (2.0 * step)
        assert numeric == pytest.approx(std_normal_pdf(x), abs=1e-6)

    def test_non_finite_rejected(self) -> None:
        """Test that NaN raises DomainError."""
        with pytest.raises(DomainError):
            std_normal_pdf(math.nan)


class TestStdNormalQuantile:
    """Test cases for std_normal_quantile."""

    def test_median(self) -> None:
        """Test N^-1(0.5) = 0."""
        assert std_normal_quantile(0.5) == 0.0

    def test_five_percent(self) -> None:
        """Test the 5% quantile."""
        assert std_normal_quantile(0.05) == pytest.approx(-1.6448536, abs=1e-6)

    @pytest.mark.parametrize("x", [-3.0, -1.0, 0.0, 1.0, 3.0])
    def test_inverts_cdf(self, x: float) -> None:
        """Test N^-1(N(x)) = x."""
        assert std_normal_quantile(std_normal_cdf(x)) == pytest.approx(x, abs=1e-9)

    @given(p=st.floats(min_value=1e-12, max_value=1.0 - 1e-12))
    def test_cdf_of_quantile(self, p: float) -> None:
        """Property test: |N(N^-1(p)) - p| <= 1e-9."""
        assert abs(std_normal_cdf(std_normal_quantile(p)) - p) <= 1e-9

    @pytest.mark.parametrize("p", [0.0, 1.0, -0.1, 1.5, math.nan])
    def test_outside_open_interval_rejected(self, p: float) -> None:
        """Test that p outside (0, 1) raises DomainError."""
        with pytest.raises(DomainError):
            std_normal_quantile(p)

    def test_domain_error_is_value_error(self) -> None:
        """Test that DomainError can be caught as ValueError."""
        with pytest.raises(ValueError, match=r"\(0, 1\)"):
            std_normal_quantile(2.0)
