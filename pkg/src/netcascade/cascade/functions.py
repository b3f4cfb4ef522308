"""Loss-linking functions g, g_k and their inverses h_k, h.

g maps the first-wave threshold delta_1 to the cascade limit delta_inf,
g_k maps it to the k-th wave threshold. Their inverses carry threshold
quantiles back to delta_1 and drive the loss distributions.
"""

import logging
import math

from scipy.optimize import brentq

from netcascade.cascade.bifurcation import bifurcation_geometry
from netcascade.cascade.fixed_points import fixed_points
from netcascade.cascade.maps import fixed_point_function
from netcascade.config import settings
from netcascade.errors import DomainError, NumericalError
from netcascade.kernel import std_normal_cdf, std_normal_pdf
from netcascade.models.constants import WaveIndex, WaveLimit
from netcascade.models.params import ScenarioParams

logger = logging.getLogger(__name__)

# Newton steps used to polish a bracketed inverse
_POLISH_STEPS = 3


def _require_wave(k: int) -> None:
    if k < 1:
        raise DomainError(f"wave index k must be >= 1, got {k}")


def total_loss_map_g(delta_1: float, kappa: float, tol: float | None = None) -> float:
    """Cascade limit g(delta_1): the smallest fixed point >= delta_1.

    In the multi regime g jumps from x_1 to x_2 at delta_1 = y_1; at exactly
    y_1 it returns x_1, where the colliding pair sits.
    """
    return fixed_points(ScenarioParams.from_reduced(delta_1, kappa), tol=tol).selected


def _g_k_with_derivative(delta_1: float, kappa: float, k: int) -> tuple[float, float]:
    value, slope = delta_1, 1.0
    for _ in range(k - 1):
        # slope first: it needs g_{k-1}, not g_k
        slope = 1.0 + kappa * std_normal_pdf(value) * slope
        value = delta_1 + kappa * std_normal_cdf(value)
    return value, slope


def g_k(delta_1: float, kappa: float, k: int) -> float:
    """Threshold after k waves: g_1(t) = t, g_k(t) = t + kappa*N(g_{k-1}(t))."""
    _require_wave(k)
    return _g_k_with_derivative(delta_1, kappa, k)[0]


def g_k_prime(delta_1: float, kappa: float, k: int) -> float:
    """Derivative g_k'(t) = 1 + kappa*phi(g_{k-1}(t))*g_{k-1}'(t); always >= 1."""
    _require_wave(k)
    return _g_k_with_derivative(delta_1, kappa, k)[1]


def h_k(y: float, kappa: float, k: int, tol: float | None = None) -> float:
    """Inverse of g_k, found by bracketed root search.

    Since t <= g_k(t) <= t + kappa, the root lies in [y - kappa, y]; the
    bracket is widened by doubling only if rounding breaks that bound.

    Raises:
        DomainError: If k < 1 or y is not finite
        NumericalError: If no bracket is found within settings.bracket_expansions doublings
    """
    _require_wave(k)
    if not math.isfinite(y):
        raise DomainError(f"y must be finite, got {y}")
    if k == 1 or kappa == 0.0:
        return y
    tol = settings.root_tol if tol is None else tol

    def residual(t: float) -> float:
        return g_k(t, kappa, k) - y

    lo, hi = y - kappa, y
    width = kappa
    for _ in range(settings.bracket_expansions):
        if residual(lo) <= 0.0 <= residual(hi):
            break
        width *= 2.0
        lo, hi = y - kappa - width, y + width
    else:
        raise NumericalError(
            f"no bracket for h_{k}({y}) with kappa={kappa} after "
            f"{settings.bracket_expansions} expansions",
        )

    root = float(brentq(residual, lo, hi, xtol=tol))
    # g_k' can be large near a fold, so polish the residual in y as well.
    best = root
    best_residual = abs(residual(root))
    for _ in range(_POLISH_STEPS):
        value, slope = _g_k_with_derivative(best, kappa, k)
        candidate = best - (value - y) / slope
        if not lo <= candidate <= hi:
            break
        candidate_residual = abs(residual(candidate))
        if candidate_residual >= best_residual:
            break
        best, best_residual = candidate, candidate_residual
    return best


def h_k_prime(y: float, kappa: float, k: int, tol: float | None = None) -> float:
    """Derivative of h_k, computed as 1 / g_k'(h_k(y))."""
    return 1.0 / g_k_prime(h_k(y, kappa, k, tol=tol), kappa, k)


def h(y: float, kappa: float, tol: float | None = None) -> float:
    """Limit of h_k as k grows.

    Equal to f(y) = y - kappa*N(y) for kappa <= kappa_0; above kappa_0 the
    decreasing stretch of f between x_1 and x_2 is flattened to the level y_1.
    """
    if not math.isfinite(y):
        raise DomainError(f"y must be finite, got {y}")
    geometry = bifurcation_geometry(kappa, tol=tol)
    if geometry.is_multi:
        assert geometry.x_1 is not None and geometry.x_2 is not None and geometry.y_1 is not None
        if geometry.x_1 <= y <= geometry.x_2:
            return geometry.y_1
    return fixed_point_function(y, kappa)


def h_prime(y: float, kappa: float, tol: float | None = None) -> float:
    """Derivative of h: 1 - kappa*phi(y), and 0 on the plateau (x_1, x_2).

    At x_2 itself the right limit is returned.
    """
    if not math.isfinite(y):
        raise DomainError(f"y must be finite, got {y}")
    geometry = bifurcation_geometry(kappa, tol=tol)
    if geometry.is_multi:
        assert geometry.x_1 is not None and geometry.x_2 is not None
        if geometry.x_1 < y < geometry.x_2:
            return 0.0
    return 1.0 - kappa * std_normal_pdf(y)


def inverse_wave_map(y: float, kappa: float, wave: WaveIndex, tol: float | None = None) -> float:
    """Inverse threshold map H for a wave index: identity, h_k or h."""
    if wave == WaveLimit.INFINITE:
        return h(y, kappa, tol=tol)
    assert isinstance(wave, int)
    return h_k(y, kappa, wave, tol=tol)


def inverse_wave_map_prime(y: float, kappa: float, wave: WaveIndex, tol: float | None = None) -> float:
    """Derivative H' matching inverse_wave_map."""
    if wave == WaveLimit.INFINITE:
        return h_prime(y, kappa, tol=tol)
    assert isinstance(wave, int)
    if wave == 1 or kappa == 0.0:
        return 1.0
    return h_k_prime(y, kappa, wave, tol=tol)
