"""Tabulation of a loss distribution on a uniform grid."""

import logging

import numpy as np

from netcascade.config import settings
from netcascade.distributions.loss import density_jump, loss_cdf, loss_pdf, support_gap
from netcascade.errors import DomainError
from netcascade.models.distribution import DistributionSpec, LossCurve, LossPoint

logger = logging.getLogger(__name__)


def tabulate(
    spec: DistributionSpec,
    grid_points: int | None = None,
    x_min: float | None = None,
    x_max: float | None = None,
) -> LossCurve:
    """Evaluate CDF and PDF on a uniform grid and annotate the gap and jump.

    Each grid point is evaluated independently of the others.

    Args:
        spec: Distribution to tabulate
        grid_points: Number of grid points, >= 2 (default: settings.grid_points)
        x_min: Lowest loss level, in (0, x_max) (default: settings.x_min)
        x_max: Highest loss level, in (x_min, 1) (default: settings.x_max)

    Returns:
        LossCurve with gap and jump set for the multi-regime total loss

    Raises:
        DomainError: If the grid controls are out of range
    """
    grid_points = settings.grid_points if grid_points is None else grid_points
    x_min = settings.x_min if x_min is None else x_min
    x_max = settings.x_max if x_max is None else x_max
    if grid_points < 2:
        raise DomainError(f"grid_points must be >= 2, got {grid_points}")
    if not 0.0 < x_min < x_max < 1.0:
        raise DomainError(f"grid bounds must satisfy 0 < x_min < x_max < 1, got {x_min}, {x_max}")

    points = [
        LossPoint(x=x, cdf=loss_cdf(x, spec), pdf=loss_pdf(x, spec))
        for x in (float(value) for value in np.linspace(x_min, x_max, grid_points))
    ]
    curve = LossCurve(spec=spec, points=points, gap=support_gap(spec), jump=density_jump(spec))
    logger.info(
        f"Tabulated {grid_points} points on [{x_min}, {x_max}] "
        f"(wave={spec.wave}, kappa={spec.kappa:.6g}, gap={'yes' if curve.gap else 'no'})",
    )
    return curve
