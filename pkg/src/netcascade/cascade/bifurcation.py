"""Fold geometry of the fixed-point function f(x) = x - kappa*N(x)."""

import logging
import math
from functools import lru_cache

from scipy.optimize import brentq

from netcascade.cascade.maps import fixed_point_function
from netcascade.config import settings
from netcascade.errors import DomainError
from netcascade.models.constants import KAPPA_0, Regime
from netcascade.models.trajectory import BifurcationGeometry

logger = logging.getLogger(__name__)


def fold_location(kappa: float) -> float:
    """Location x_0 = sqrt(2 ln(kappa / kappa_0)) of the local minimum of f.

    Defined for kappa >= kappa_0; equals 0 at the regime boundary.

    Raises:
        DomainError: If kappa < kappa_0
    """
    if kappa < KAPPA_0:
        raise DomainError(f"fold location needs kappa >= {KAPPA_0}, got {kappa}")
    return math.sqrt(2.0 * math.log(kappa / KAPPA_0))


def bifurcation_geometry(kappa: float, tol: float | None = None) -> BifurcationGeometry:
    """Classify the regime of kappa and locate the fold thresholds.

    kappa = kappa_0 exactly counts as single: f is still nondecreasing there.

    Args:
        kappa: Fire-sale strength, finite and >= 0
        tol: Absolute tolerance for x_2 (default: settings.root_tol)

    Returns:
        BifurcationGeometry; the fold fields are set only in the multi regime

    Raises:
        DomainError: If kappa is negative or not finite
    """
    if not math.isfinite(kappa) or kappa < 0.0:
        raise DomainError(f"kappa must be finite and >= 0, got {kappa}")
    if kappa <= KAPPA_0:
        return BifurcationGeometry(kappa=kappa, regime=Regime.SINGLE)

    return _multi_geometry(kappa, settings.root_tol if tol is None else tol)


@lru_cache(maxsize=256)
def _multi_geometry(kappa: float, tol: float) -> BifurcationGeometry:
    x_0 = fold_location(kappa)
    x_1 = -x_0
    y_0 = fixed_point_function(x_0, kappa)
    y_1 = fixed_point_function(x_1, kappa)
    # f >= x - kappa, so f(y_1 + kappa + 1) > y_1 closes the bracket
    x_2 = brentq(
        lambda x: fixed_point_function(x, kappa) - y_1,
        x_0,
        y_1 + kappa + 1.0,
        xtol=tol,
    )
    logger.debug(f"kappa={kappa}: x_0={x_0:.12g}, y_0={y_0:.12g}, y_1={y_1:.12g}, x_2={x_2:.12g}")
    return BifurcationGeometry(
        kappa=kappa,
        regime=Regime.MULTI,
        x_0=x_0,
        x_1=x_1,
        y_0=y_0,
        y_1=y_1,
        x_2=float(x_2),
    )
