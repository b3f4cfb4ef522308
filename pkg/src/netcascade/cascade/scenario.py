"""Reduction of economic inputs to the scenario quantities for one market draw."""

import logging
import math

from netcascade.errors import DomainError
from netcascade.kernel import std_normal_quantile
from netcascade.models.params import ModelParams, ScenarioParams

logger = logging.getLogger(__name__)


def derive_scenario(params: ModelParams, z: float) -> ScenarioParams:
    """Compute alpha, beta, kappa and delta_1 for market factor draw z.

    Under the balance-sheet parameterization delta_1 = (ln(L/A) - beta) / alpha;
    under the idiosyncratic-q one delta_1 = (N^-1(q) - sqrt(rho)*z) / sqrt(1 - rho).

    Args:
        params: Validated model inputs
        z: Market factor draw

    Returns:
        ScenarioParams for this draw

    Raises:
        DomainError: If z is not finite or rho = 1
    """
    if not math.isfinite(z):
        raise DomainError(f"z must be finite, got {z}")
    if params.rho >= 1.0:
        raise DomainError(f"rho must be below 1 (alpha = 0), got {params.rho}")

    alpha = params.alpha
    beta = params.mu + params.sigma * math.sqrt(params.rho) * z
    if params.idiosyncratic_q is not None:
        delta_1 = (
            std_normal_quantile(params.idiosyncratic_q) - math.sqrt(params.rho) * z
        ) / math.sqrt(1.0 - params.rho)
    else:
        assert params.assets is not None and params.liabilities is not None
        delta_1 = (math.log(params.liabilities / params.assets) - beta) / alpha

    scenario = ScenarioParams(delta_1=delta_1, kappa=params.a / alpha, alpha=alpha, beta=beta, z=z)
    logger.debug(f"Scenario z={z}: delta_1={scenario.delta_1:.6g}, kappa={scenario.kappa:.6g}")
    return scenario
