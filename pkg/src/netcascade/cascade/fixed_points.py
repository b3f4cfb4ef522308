"""Fixed points of the cascade map and their stability."""

import logging

import numpy as np
from scipy.optimize import brentq
from scipy.special import ndtr

from netcascade.cascade.bifurcation import bifurcation_geometry
from netcascade.cascade.maps import fixed_point_function
from netcascade.config import settings
from netcascade.errors import DomainError
from netcascade.kernel import std_normal_pdf
from netcascade.models.constants import Stability
from netcascade.models.params import ScenarioParams
from netcascade.models.trajectory import BifurcationGeometry, FixedPointSet

logger = logging.getLogger(__name__)


def _scan_grid(delta_1: float, kappa: float, geometry: BifurcationGeometry, scan_points: int) -> np.ndarray:
    """Uniform scan over [delta_1 - 1, delta_1 + kappa + 1] with the extrema of f inserted.

    With x_1 and x_0 on the grid, f is monotone between neighbouring nodes, so
    every root is either a node or inside exactly one sign change.
    """
    grid = np.linspace(delta_1 - 1.0, delta_1 + kappa + 1.0, scan_points)
    if geometry.is_multi:
        grid = np.union1d(grid, [geometry.x_1, geometry.x_0])
    return grid


def _classify(x: float, kappa: float, geometry: BifurcationGeometry) -> Stability:
    """Stability from the slope F'(x) = kappa*phi(x) against 1.

    In the multi regime F'(x) > 1 exactly when |x| < x_0, so the fold
    location decides and rounding in phi cannot flip a label.
    """
    if geometry.is_multi:
        assert geometry.x_0 is not None
        if abs(x) < geometry.x_0:
            return Stability.UNSTABLE
        if abs(x) > geometry.x_0:
            return Stability.STABLE
        return Stability.NEUTRAL
    slope = kappa * std_normal_pdf(x)
    return Stability.NEUTRAL if slope >= 1.0 else Stability.STABLE


def fixed_points(scenario: ScenarioParams, tol: float | None = None) -> FixedPointSet:
    """Locate every solution of f(x) = x - kappa*N(x) = delta_1.

    All roots lie in [delta_1, delta_1 + kappa] because 0 <= N <= 1. The
    selected point, the cascade limit, is the smallest root: every root is
    >= delta_1 and the orbit climbs monotonically into the first one.

    Args:
        scenario: Scenario holding delta_1 and kappa
        tol: Absolute root tolerance (default: settings.root_tol)

    Returns:
        FixedPointSet with sorted points, stability labels and the selected limit

    Raises:
        DomainError: If tol <= 0
    """
    tol = settings.root_tol if tol is None else tol
    if not tol > 0.0:
        raise DomainError(f"tol must be > 0, got {tol}")

    delta_1, kappa = scenario.delta_1, scenario.kappa
    if kappa == 0.0:
        return FixedPointSet(points=(delta_1,), stability=(Stability.STABLE,), selected=delta_1)

    geometry = bifurcation_geometry(kappa)
    grid = _scan_grid(delta_1, kappa, geometry, settings.scan_points)
    residual = grid - kappa * ndtr(grid) - delta_1
    roots: list[float] = []
    for index in range(len(grid)):
        if residual[index] == 0.0:
            roots.append(float(grid[index]))
        elif index + 1 < len(grid) and residual[index] * residual[index + 1] < 0.0:
            root = brentq(
                lambda x: fixed_point_function(x, kappa) - delta_1,
                float(grid[index]),
                float(grid[index + 1]),
                xtol=tol,
            )
            roots.append(float(root))

    # brentq stops within xtol of the root, which can step outside [delta_1, delta_1 + kappa]
    roots = [min(max(root, delta_1), delta_1 + kappa) for root in roots]

    if geometry.is_multi:
        assert geometry.y_0 is not None and geometry.y_1 is not None
        for fold in (geometry.y_0, geometry.y_1):
            if abs(delta_1 - fold) < 1e-9:
                logger.warning(
                    f"delta_1={delta_1:.12g} sits within 1e-9 of a fold value {fold:.12g}; "
                    "fixed points are nearly tangent",
                )

    stability = tuple(_classify(root, kappa, geometry) for root in roots)
    selected = roots[0]
    logger.debug(f"delta_1={delta_1:.12g}, kappa={kappa:.6g}: fixed points {roots}")
    return FixedPointSet(points=tuple(roots), stability=stability, selected=selected)
