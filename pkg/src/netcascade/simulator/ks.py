"""Kolmogorov-Smirnov distance between samples and an analytic CDF."""

from collections.abc import Callable, Sequence

import numpy as np
from scipy.stats import kstest

from netcascade.errors import DomainError


def ks_distance(samples: Sequence[float] | np.ndarray, analytic_cdf: Callable[[float], float]) -> float:
    """Sup-distance between the empirical CDF of samples and analytic_cdf.

    The analytic CDF is only called on (0, 1): samples at or below 0 count
    as F = 0 and samples at or above 1 as F = 1.

    Raises:
        DomainError: If samples is empty
    """
    values = np.asarray(samples, dtype=np.float64)
    if values.size == 0:
        raise DomainError("ks_distance needs at least one sample")

    def clamped_cdf(points: np.ndarray) -> np.ndarray:
        return np.array(
            [0.0 if x <= 0.0 else 1.0 if x >= 1.0 else analytic_cdf(float(x)) for x in np.atleast_1d(points)],
        )

    return float(kstest(values, clamped_cdf, method="asymp").statistic)
