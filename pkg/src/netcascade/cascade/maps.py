"""The cascade map F and the fixed-point function f."""

from netcascade.kernel import std_normal_cdf
from netcascade.models.params import ScenarioParams


def map_F(x: float, scenario: ScenarioParams) -> float:  # noqa: N802
    """Cascade map F(x) = delta_1 + kappa*N(x); strictly increasing for kappa > 0."""
    return scenario.delta_1 + scenario.kappa * std_normal_cdf(x)


def fixed_point_function(x: float, kappa: float) -> float:
    """f(x) = x - kappa*N(x); fixed points of F solve f(x) = delta_1."""
    return x - kappa * std_normal_cdf(x)
