"""Constants and Enums shared by the cascade models."""

import math
from enum import StrEnum

# Critical fire-sale strength: f(x) = x - kappa*N(x) stops being monotone above it.
KAPPA_0 = math.sqrt(2.0 * math.pi)


class Regime(StrEnum):
    """Number of equilibria the cascade map can have."""

    SINGLE = "single"
    MULTI = "multi"


class Stability(StrEnum):
    """Stability label of a fixed point of the cascade map."""

    STABLE = "stable"
    UNSTABLE = "unstable"
    NEUTRAL = "neutral"


class WaveLimit(StrEnum):
    """Marker for the exhausted cascade (infinitely many default waves)."""

    INFINITE = "inf"


# A wave index is either a positive integer or the infinite-wave marker.
WaveIndex = int | WaveLimit


class Subcommand(StrEnum):
    """CLI subcommands."""

    SOLVE = "solve"
    ORBIT = "orbit"
    FIXED_POINTS = "fixed-points"
    BIFURCATION = "bifurcation"
    DISTRIBUTION = "distribution"
    SIMULATE = "simulate"
    COMPARE = "compare"


class CSVColumn(StrEnum):
    """Column names used in CSV output."""

    KEY = "key"
    VALUE = "value"
    K = "k"
    DELTA_K = "delta_k"
    Q_K = "q_k"
    POINT = "point"
    STABILITY = "stability"
    BASIN_LO = "basin_lo"
    BASIN_HI = "basin_hi"
    KAPPA = "kappa"
    REGIME = "regime"
    X0 = "x0"
    X1 = "x1"
    Y0 = "y0"
    Y1 = "y1"
    X2 = "x2"
    X = "x"
    CDF = "cdf"
    PDF = "pdf"
    TRIAL = "trial"
    Z = "z"
    WAVES = "waves"
    Q_FINAL = "q_final"
    STATISTIC = "statistic"


# Quantile levels reported in ensemble summaries
SUMMARY_QUANTILES: tuple[float, ...] = (0.5, 0.9, 0.99, 0.999)
