"""Analytic loss distributions."""

from netcascade.distributions.loss import (
    a_transform,
    density_jump,
    loss_cdf,
    loss_mean,
    loss_pdf,
    support_gap,
    vasicek_cdf,
    vasicek_pdf,
)
from netcascade.distributions.tabulate import tabulate

__all__ = [
    "a_transform",
    "density_jump",
    "loss_cdf",
    "loss_mean",
    "loss_pdf",
    "support_gap",
    "tabulate",
    "vasicek_cdf",
    "vasicek_pdf",
]
