"""Tests for scenario derivation and the one-call solver."""

import math

import pytest

from netcascade.cascade import derive_scenario, solve_scenario
from netcascade.errors import DomainError
from netcascade.kernel import std_normal_quantile
from netcascade.models.constants import Regime
from netcascade.models.params import ModelParams


class TestDeriveScenario:
    """Test cases for derive_scenario."""

    def test_zero_correlation_drops_market_factor(self) -> None:
        """Test that Z drops out of delta_1 at rho = 0."""
        params = ModelParams(mu=0.0, sigma=1.0, rho=0.0, a=0.5, idiosyncratic_q=0.1)
        scenario = derive_scenario(params, 7.0)
        assert scenario.alpha == 1.0
        assert scenario.kappa == 0.5
        assert scenario.delta_1 == pytest.approx(std_normal_quantile(0.1), abs=1e-15)

    def test_correlated_threshold(self) -> None:
        """Test delta_1 = N^-1(q)/sqrt(1 - rho) at Z = 0."""
        params = ModelParams(sigma=0.25, rho=0.2, a=0.2, idiosyncratic_q=0.05)
        scenario = derive_scenario(params, 0.0)
        assert scenario.delta_1 == pytest.approx(-1.83897, abs=1e-4)
        assert scenario.delta_1 == pytest.approx(std_normal_quantile(0.05) / math.sqrt(0.8), rel=1e-14)

    def test_alpha_and_kappa(self) -> None:
        """Test alpha and kappa arithmetic."""
        params = ModelParams(sigma=0.2, rho=0.36, a=0.1, idiosyncratic_q=0.3)
        scenario = derive_scenario(params, 0.0)
        assert scenario.alpha == pytest.approx(0.16)
        assert scenario.kappa == pytest.approx(0.625)

    def test_beta(self) -> None:
        """Test beta = mu + sigma*sqrt(rho)*Z."""
        params = ModelParams(mu=0.01, sigma=0.2, rho=0.25, a=0.1, idiosyncratic_q=0.3)
        assert derive_scenario(params, 2.0).beta == pytest.approx(0.01 + 0.2 * 0.5 * 2.0)

    @pytest.mark.parametrize("z", [-2.0, 0.0, 1.3])
    def test_parameterizations_agree(self, z: float) -> None:
        """Test a balance sheet with matching q gives the same threshold."""
        mu, sigma, rho, q = 0.02, 0.3, 0.4, 0.07
        liabilities = math.exp(mu + sigma * std_normal_quantile(q))
        by_q = ModelParams(mu=mu, sigma=sigma, rho=rho, a=0.1, idiosyncratic_q=q)
        by_sheet = ModelParams(mu=mu, sigma=sigma, rho=rho, a=0.1, assets=1.0, liabilities=liabilities)
        assert derive_scenario(by_sheet, z).delta_1 == pytest.approx(derive_scenario(by_q, z).delta_1, abs=1e-12)

    @pytest.mark.parametrize("z", [math.nan, math.inf])
    def test_non_finite_z(self, z: float) -> None:
        """Test that a non-finite market draw is rejected."""
        params = ModelParams(sigma=0.25, rho=0.2, a=0.2, idiosyncratic_q=0.05)
        with pytest.raises(DomainError, match="z must be finite"):
            derive_scenario(params, z)


class TestSolveScenario:
    """Test cases for solve_scenario."""

    def test_losses_only_grow(self) -> None:
        """Test q_inf >= q_1 and the systemic loss is their difference."""
        params = ModelParams(sigma=0.25, rho=0.2, a=0.2, idiosyncratic_q=0.05)
        solution = solve_scenario(params, 0.0)
        assert solution.q_inf >= solution.q_1
        assert solution.systemic_loss == pytest.approx(solution.q_inf - solution.q_1)
        assert solution.regime == Regime.SINGLE

    def test_no_fire_sales_means_no_systemic_loss(self) -> None:
        """Test a = 0 leaves only the direct loss."""
        params = ModelParams(sigma=0.25, rho=0.2, a=0.0, idiosyncratic_q=0.05)
        solution = solve_scenario(params, -1.0)
        assert solution.systemic_loss == 0.0
        assert solution.delta_inf == solution.delta_1

    def test_multi_regime_reported(self) -> None:
        """Test a strong fire sale reports the multi regime and its geometry."""
        params = ModelParams(sigma=0.25, rho=0.2, a=4.0 * 0.25 * math.sqrt(0.8), idiosyncratic_q=0.05)
        solution = solve_scenario(params, 0.0)
        assert solution.kappa == pytest.approx(4.0)
        assert solution.regime == Regime.MULTI
        assert solution.geometry.is_multi
