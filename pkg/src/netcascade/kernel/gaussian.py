"""Standard normal density, distribution and quantile functions.

Every other module goes through these three functions. The CDF is scipy's
``ndtr``, which switches to the complementary error function in the tails, so
values such as N(-8) keep full relative precision. The quantile is ``ndtri``,
accurate to a few ulps over the whole open interval.
"""

import math

from scipy.special import ndtr, ndtri

from netcascade.errors import DomainError

INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def _require_finite(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value}")
    return value


def std_normal_cdf(x: float) -> float:
    """Return N(x), the standard normal CDF.

    Raises:
        DomainError: If x is not finite.
    """
    return float(ndtr(_require_finite(x, "x")))


def std_normal_pdf(x: float) -> float:
    """Return phi(x) = exp(-x^2/2) / sqrt(2 pi).

    Raises:
        DomainError: If x is not finite.
    """
    x = _require_finite(x, "x")
    return INV_SQRT_2PI * math.exp(-0.5 * x * x)


def std_normal_quantile(p: float) -> float:
    """Return N^-1(p) for p in the open interval (0, 1).

    Raises:
        DomainError: If p is not finite or lies outside (0, 1).
    """
    p = _require_finite(p, "p")
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must lie in the open interval (0, 1), got {p}")
    return float(ndtri(p))

