"""Tests for ModelParams and ScenarioParams."""

import math

import pytest
from pydantic import ValidationError

from netcascade.kernel import std_normal_quantile
from netcascade.models.params import ModelParams, ScenarioParams


class TestModelParams:
    """Test cases for ModelParams validation and derived quantities."""

    def test_idiosyncratic_parameterization(self) -> None:
        """Test building params from q alone."""
        params = ModelParams(sigma=0.25, rho=0.2, a=0.1, idiosyncratic_q=0.05)
        assert params.idiosyncratic_probability() == 0.05
        assert params.mu == 0.0

    def test_balance_sheet_parameterization(self) -> None:
        """Test that q is recovered as N((ln(L/A) - mu) / sigma)."""
        liabilities = math.exp(0.3 * std_normal_quantile(0.1))
        params = ModelParams(sigma=0.3, rho=0.5, a=0.0, assets=1.0, liabilities=liabilities)
        assert params.idiosyncratic_probability() == pytest.approx(0.1, abs=1e-12)

    def test_alpha_and_kappa(self) -> None:
        """Test alpha = sigma*sqrt(1-rho) and kappa = a/alpha."""
        params = ModelParams(sigma=0.2, rho=0.36, a=0.1, idiosyncratic_q=0.05)
        assert params.alpha == pytest.approx(0.16)
        assert params.kappa == pytest.approx(0.625)

    @pytest.mark.parametrize("rho", [1.0, -0.1, 1.5])
    def test_rho_range(self, rho: float) -> None:
        """Test that rho outside [0, 1) is rejected with its range in the message."""
        with pytest.raises(ValidationError, match=r"rho must be in \[0, 1\)"):
            ModelParams(sigma=1.0, rho=rho, a=0.0, idiosyncratic_q=0.1)

    @pytest.mark.parametrize("q", [0.0, 1.0])
    def test_q_range(self, q: float) -> None:
        """Test that q must lie strictly inside (0, 1)."""
        with pytest.raises(ValidationError, match="idiosyncratic_q"):
            ModelParams(sigma=1.0, rho=0.1, a=0.0, idiosyncratic_q=q)

    def test_both_parameterizations_rejected(self) -> None:
        """Test that giving q and a balance sheet together fails."""
        with pytest.raises(ValidationError, match="not both"):
            ModelParams(sigma=1.0, rho=0.1, a=0.0, idiosyncratic_q=0.1, assets=1.0, liabilities=0.5)

    def test_neither_parameterization_rejected(self) -> None:
        """Test that one parameterization is required."""
        with pytest.raises(ValidationError, match="required"):
            ModelParams(sigma=1.0, rho=0.1, a=0.0)

    @pytest.mark.parametrize(("assets", "liabilities"), [(1.0, 1.0), (1.0, 1.5), (1.0, -0.5)])
    def test_insolvent_start_rejected(self, assets: float, liabilities: float) -> None:
        """Test that 0 < L < A is enforced."""
        with pytest.raises(ValidationError, match="0 < L < A"):
            ModelParams(sigma=1.0, rho=0.1, a=0.0, assets=assets, liabilities=liabilities)

    def test_missing_liabilities_rejected(self) -> None:
        """Test that assets without liabilities fail."""
        with pytest.raises(ValidationError, match="together"):
            ModelParams(sigma=1.0, rho=0.1, a=0.0, assets=1.0)

    @pytest.mark.parametrize("field", ["sigma", "a"])
    def test_non_finite_rejected(self, field: str) -> None:
        """Test that infinities are rejected."""
        values = {"sigma": 1.0, "rho": 0.1, "a": 0.0, "idiosyncratic_q": 0.1, field: math.inf}
        with pytest.raises(ValidationError):
            ModelParams(**values)

    def test_frozen(self) -> None:
        """Test that params are immutable."""
        params = ModelParams(sigma=1.0, rho=0.1, a=0.0, idiosyncratic_q=0.1)
        with pytest.raises(ValidationError):
            params.a = 1.0  # type: ignore[misc]


class TestScenarioParams:
    """Test cases for ScenarioParams."""

    def test_from_reduced(self) -> None:
        """Test the reduced constructor leaves the economic fields empty."""
        scenario = ScenarioParams.from_reduced(-1.0, 2.0)
        assert scenario.delta_1 == -1.0
        assert scenario.kappa == 2.0
        assert scenario.alpha is None and scenario.beta is None and scenario.z is None

    def test_negative_kappa_rejected(self) -> None:
        """Test that kappa must be >= 0."""
        with pytest.raises(ValidationError):
            ScenarioParams.from_reduced(0.0, -1.0)
