"""Data models for the cascade solver and the network simulator."""

from netcascade.models.constants import (
    KAPPA_0,
    SUMMARY_QUANTILES,
    CSVColumn,
    Regime,
    Stability,
    Subcommand,
    WaveIndex,
    WaveLimit,
)
from netcascade.models.distribution import (
    DensityJump,
    DistributionSpec,
    LossCurve,
    LossGap,
    LossPoint,
)
from netcascade.models.network import (
    EnsembleResult,
    EnsembleSummary,
    NetworkConfig,
    TrialResult,
)
from netcascade.models.params import ModelParams, ScenarioParams
from netcascade.models.trajectory import (
    Basin,
    BifurcationGeometry,
    CascadeSolution,
    CascadeTrajectory,
    FixedPointSet,
    OrbitStep,
)

__all__ = [
    "KAPPA_0",
    "SUMMARY_QUANTILES",
    "Basin",
    "BifurcationGeometry",
    "CSVColumn",
    "CascadeSolution",
    "CascadeTrajectory",
    "DensityJump",
    "DistributionSpec",
    "EnsembleResult",
    "EnsembleSummary",
    "FixedPointSet",
    "LossCurve",
    "LossGap",
    "LossPoint",
    "ModelParams",
    "NetworkConfig",
    "OrbitStep",
    "Regime",
    "ScenarioParams",
    "Stability",
    "Subcommand",
    "TrialResult",
    "WaveIndex",
    "WaveLimit",
]
