"""Standard normal math kernel."""

from netcascade.kernel.gaussian import (
    INV_SQRT_2PI,
    std_normal_cdf,
    std_normal_pdf,
    std_normal_quantile,
)

__all__ = [
    "INV_SQRT_2PI",
    "std_normal_cdf",
    "std_normal_pdf",
    "std_normal_quantile",
]
