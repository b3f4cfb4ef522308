"""Iteration of the cascade map, one default wave at a time."""

import logging

from netcascade.cascade.maps import map_F
from netcascade.config import settings
from netcascade.errors import DomainError
from netcascade.models.params import ScenarioParams
from netcascade.models.trajectory import CascadeTrajectory

logger = logging.getLogger(__name__)


def run_orbit(
    scenario: ScenarioParams,
    tol: float | None = None,
    max_iter: int | None = None,
) -> CascadeTrajectory:
    """Iterate delta_k = F(delta_{k-1}) starting from delta_1.

    Stops once |delta_k - delta_{k-1}| < tol. Near a fold the orbit crawls,
    so hitting max_iter returns the last iterate flagged as unconverged
    instead of raising; use fixed_points for the exact limit there.

    Args:
        scenario: Scenario holding delta_1 and kappa
        tol: Convergence tolerance (default: settings.orbit_tol)
        max_iter: Maximum number of map applications (default: settings.orbit_max_iter)

    Returns:
        CascadeTrajectory with every threshold delta_k

    Raises:
        DomainError: If tol <= 0 or max_iter < 1
    """
    tol = settings.orbit_tol if tol is None else tol
    max_iter = settings.orbit_max_iter if max_iter is None else max_iter
    if not tol > 0.0:
        raise DomainError(f"tol must be > 0, got {tol}")
    if max_iter < 1:
        raise DomainError(f"max_iter must be >= 1, got {max_iter}")

    deltas = [scenario.delta_1]
    converged = False
    for _ in range(max_iter):
        current = map_F(deltas[-1], scenario)
        previous = deltas[-1]
        deltas.append(current)
        if abs(current - previous) < tol:
            converged = True
            break

    iterations = len(deltas) - 1
    if converged:
        logger.debug(f"Orbit converged after {iterations} iterations to {deltas[-1]:.12g}")
    else:
        logger.warning(
            f"Orbit from delta_1={scenario.delta_1:.12g} (kappa={scenario.kappa:.6g}) "
            f"did not converge in {max_iter} iterations; last iterate {deltas[-1]:.12g}",
        )
    return CascadeTrajectory(
        deltas=tuple(deltas),
        converged=converged,
        delta_inf=deltas[-1] if converged else None,
        iterations_used=iterations,
    )
