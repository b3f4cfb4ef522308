"""One-call solution of a scenario: direct, total and systemic loss."""

import logging

from netcascade.cascade.bifurcation import bifurcation_geometry
from netcascade.cascade.fixed_points import fixed_points
from netcascade.cascade.scenario import derive_scenario
from netcascade.kernel import std_normal_cdf
from netcascade.models.params import ModelParams
from netcascade.models.trajectory import CascadeSolution

logger = logging.getLogger(__name__)


def solve_scenario(params: ModelParams, z: float, tol: float | None = None) -> CascadeSolution:
    """Solve the infinite homogeneous network for market draw z.

    Args:
        params: Validated model inputs
        z: Market factor draw
        tol: Root tolerance (default: settings.root_tol)

    Returns:
        CascadeSolution with q_1 = N(delta_1) and q_inf = N(delta_inf)
    """
    scenario = derive_scenario(params, z)
    points = fixed_points(scenario, tol=tol)
    geometry = bifurcation_geometry(scenario.kappa, tol=tol)
    solution = CascadeSolution(
        delta_1=scenario.delta_1,
        kappa=scenario.kappa,
        delta_inf=points.selected,
        q_1=std_normal_cdf(scenario.delta_1),
        q_inf=std_normal_cdf(points.selected),
        regime=geometry.regime,
        fixed_points=points,
        geometry=geometry,
    )
    logger.info(
        f"Solved z={z}: q_1={solution.q_1:.6g}, q_inf={solution.q_inf:.6g}, "
        f"systemic={solution.systemic_loss:.6g} ({solution.regime} regime)",
    )
    return solution
