"""Closed-form CDF and PDF of the loss after k default waves.

With u = N^-1(x) and H the inverse threshold map of the wave index
(identity for k = 1, h_k for finite k, h for the exhausted cascade):

    A(x) = (sqrt(1 - rho) * H(u) - N^-1(q)) / sqrt(rho)
    F(x) = N(A(x))
    p(x) = sqrt((1 - rho) / rho) * H'(u) * phi(A(x)) / phi(u)

Above kappa_0 the total-loss density vanishes on (N(x_1), N(x_2)) and jumps
at N(x_2), where the right limit is reported.
"""

import logging
import math

from scipy.integrate import quad

from netcascade.cascade.bifurcation import bifurcation_geometry
from netcascade.cascade.functions import inverse_wave_map, inverse_wave_map_prime
from netcascade.config import settings
from netcascade.errors import DomainError
from netcascade.kernel import std_normal_cdf, std_normal_pdf, std_normal_quantile
from netcascade.models.distribution import DensityJump, DistributionSpec, LossGap

logger = logging.getLogger(__name__)


def _require_level(x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or not 0.0 < x < 1.0:
        raise DomainError(f"loss level x must lie in the open interval (0, 1), got {x}")
    return x


def _outside_clamp(x: float) -> bool:
    clamp = settings.domain_clamp
    return x <= clamp or x >= 1.0 - clamp


def _density(u: float, a_value: float, derivative: float, rho: float) -> float:
    return math.sqrt((1.0 - rho) / rho) * derivative * std_normal_pdf(a_value) / std_normal_pdf(u)


def support_gap(spec: DistributionSpec) -> LossGap | None:
    """Loss interval (N(x_1), N(x_2)) the total loss cannot occupy, if any."""
    if not spec.is_infinite:
        return None
    geometry = bifurcation_geometry(spec.kappa)
    if not geometry.is_multi:
        return None
    assert geometry.x_1 is not None and geometry.x_2 is not None
    return LossGap(lo=std_normal_cdf(geometry.x_1), hi=std_normal_cdf(geometry.x_2))


def a_transform(x: float, spec: DistributionSpec, tol: float | None = None) -> float:
    """A(x) such that the loss stays below x exactly when Z > -A(x).

    Raises:
        DomainError: If x is outside (0, 1)
    """
    x = _require_level(x)
    gap = support_gap(spec)
    if gap is not None and gap.lo < x < gap.hi:
        # plateau of h, pinned so the CDF is exactly flat across the gap
        transformed = bifurcation_geometry(spec.kappa).y_1
    else:
        transformed = inverse_wave_map(std_normal_quantile(x), spec.kappa, spec.wave, tol=tol)
    assert transformed is not None
    return (
        math.sqrt(1.0 - spec.rho) * transformed - std_normal_quantile(spec.idiosyncratic_q)
    ) / math.sqrt(spec.rho)


def loss_cdf(x: float, spec: DistributionSpec, tol: float | None = None) -> float:
    """P(q_k < x) = N(A(x)).

    Levels within settings.domain_clamp of 0 or 1 report 0 or 1.

    Raises:
        DomainError: If x is outside (0, 1)
    """
    x = _require_level(x)
    if _outside_clamp(x):
        return 0.0 if x < 0.5 else 1.0
    return std_normal_cdf(a_transform(x, spec, tol=tol))


def loss_pdf(x: float, spec: DistributionSpec, tol: float | None = None) -> float:
    """Density of q_k at x; zero inside the support gap, right limit at the jump.

    Raises:
        DomainError: If x is outside (0, 1)
    """
    x = _require_level(x)
    if _outside_clamp(x):
        return 0.0
    u = std_normal_quantile(x)
    gap = support_gap(spec)
    if gap is not None and gap.lo < x < gap.hi:
        return 0.0
    if gap is not None and x >= gap.hi:
        # right branch of h: u may round just below x_2 at the jump itself
        derivative = 1.0 - spec.kappa * std_normal_pdf(u)
    else:
        derivative = inverse_wave_map_prime(u, spec.kappa, spec.wave, tol=tol)
    return _density(u, a_transform(x, spec, tol=tol), derivative, spec.rho)


def loss_mean(spec: DistributionSpec, tol: float | None = None) -> float:
    """Expected loss E[q_k] = integral over (0, 1) of 1 - F(x).

    Integrated piecewise, with the support gap as its own piece so the kink
    at the density jump sits on a piece boundary.
    """
    gap = support_gap(spec)
    edges = [0.0, gap.lo, gap.hi, 1.0] if gap is not None else [0.0, 1.0]
    total = 0.0
    for lo, hi in zip(edges, edges[1:]):
        value, error = quad(lambda x: 1.0 - loss_cdf(x, spec, tol=tol), lo, hi, limit=200)
        logger.debug(f"loss mean piece [{lo:.6g}, {hi:.6g}]: {value:.12g} (+/- {error:.2g})")
        total += value
    return total


def density_jump(spec: DistributionSpec) -> DensityJump | None:
    """Jump of the total-loss density at N(x_2): zero on the left, positive on the right."""
    gap = support_gap(spec)
    if gap is None:
        return None
    return DensityJump(at=gap.hi, left_pdf=0.0, right_pdf=loss_pdf(gap.hi, spec))


def vasicek_cdf(x: float, idiosyncratic_q: float, rho: float) -> float:
    """Direct-loss (Vasicek) CDF N((sqrt(1 - rho)*N^-1(x) - N^-1(q)) / sqrt(rho))."""
    spec = DistributionSpec.vasicek(idiosyncratic_q, rho)
    x = _require_level(x)
    if _outside_clamp(x):
        return 0.0 if x < 0.5 else 1.0
    return std_normal_cdf(_vasicek_a(x, spec))


def vasicek_pdf(x: float, idiosyncratic_q: float, rho: float) -> float:
    """Direct-loss (Vasicek) density, the derivative of vasicek_cdf."""
    spec = DistributionSpec.vasicek(idiosyncratic_q, rho)
    x = _require_level(x)
    if _outside_clamp(x):
        return 0.0
    return _density(std_normal_quantile(x), _vasicek_a(x, spec), 1.0, spec.rho)


def _vasicek_a(x: float, spec: DistributionSpec) -> float:
    return (
        math.sqrt(1.0 - spec.rho) * std_normal_quantile(x) - std_normal_quantile(spec.idiosyncratic_q)
    ) / math.sqrt(spec.rho)
