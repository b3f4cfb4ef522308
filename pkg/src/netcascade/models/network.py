"""Models for the finite-n Monte Carlo network simulation."""

import math
from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from netcascade.kernel import std_normal_quantile
from netcascade.models.params import ModelParams


class NetworkConfig(BaseModel):
    """A network of n nodes and the ensemble of trials to run on it.

    Balance sheets are homogeneous (scalars) or per-node lists of length n.
    """

    n: int = Field(..., ge=1, description="Number of nodes")
    assets: float | list[float] = Field(..., description="A or per-node A_i")
    liabilities: float | list[float] = Field(..., description="L or per-node L_i")
    mu: float = Field(default=0.0, description="Mean log asset return")
    sigma: float = Field(..., ge=0.0, description="Log return volatility")
    rho: float = Field(..., ge=0.0, lt=1.0, description="Asset correlation")
    a: float = Field(..., ge=0.0, description="Fire-sale impact constant")
    trials: int = Field(default=1, ge=1, description="Number of independent trials")
    master_seed: int = Field(default=0, ge=0, lt=2**64, description="Seed all trial streams derive from")

    @model_validator(mode="after")
    def validate_balance_sheets(self) -> Self:
        """Check list lengths and that every node starts solvent."""
        for name, value in (("assets", self.assets), ("liabilities", self.liabilities)):
            if isinstance(value, list) and len(value) != self.n:
                raise ValueError(f"{name} must have n={self.n} entries, got {len(value)}")
        assets = self.asset_vector()
        liabilities = self.liability_vector()
        if not np.all(np.isfinite(assets)) or not np.all(np.isfinite(liabilities)):
            raise ValueError("balance sheets must be finite")
        bad = np.flatnonzero(~((liabilities > 0.0) & (liabilities < assets)))
        if bad.size:
            node = int(bad[0])
            raise ValueError(
                f"every node needs 0 < L_i < A_i; node {node} has "
                f"L={liabilities[node]}, A={assets[node]}",
            )
        return self

    @classmethod
    def from_model(
        cls,
        params: ModelParams,
        n: int,
        trials: int = 1,
        master_seed: int = 0,
    ) -> "NetworkConfig":
        """Build a homogeneous network from economic inputs.

        Under the idiosyncratic-q parameterization the balance sheet is
        A = 1, L = exp(mu + sigma*N^-1(q)), which reproduces q at zero
        correlation. That L must still lie below A.
        """
        if params.idiosyncratic_q is not None:
            assets = 1.0
            liabilities = math.exp(params.mu + params.sigma * std_normal_quantile(params.idiosyncratic_q))
        else:
            assert params.assets is not None and params.liabilities is not None
            assets, liabilities = params.assets, params.liabilities
        return cls(
            n=n,
            assets=assets,
            liabilities=liabilities,
            mu=params.mu,
            sigma=params.sigma,
            rho=params.rho,
            a=params.a,
            trials=trials,
            master_seed=master_seed,
        )

    def asset_vector(self) -> np.ndarray:
        """Pre-shock assets as an array of length n."""
        return np.broadcast_to(np.asarray(self.assets, dtype=np.float64), (self.n,))

    def liability_vector(self) -> np.ndarray:
        """Liabilities as an array of length n."""
        return np.broadcast_to(np.asarray(self.liabilities, dtype=np.float64), (self.n,))

    @property
    def is_homogeneous(self) -> bool:
        """True when every node shares one balance sheet."""
        return not isinstance(self.assets, list) and not isinstance(self.liabilities, list)

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)


class TrialResult(BaseModel):
    """Outcome of one cascade on the finite network."""

    trial: int = Field(..., ge=0)
    z: float
    wave_losses: tuple[float, ...] = Field(..., min_length=1, description="Cumulative q_k per wave")
    waves: int = Field(..., ge=1)

    @model_validator(mode="after")
    def validate_waves(self) -> Self:
        """Check that losses strictly grow wave over wave and stay in [0, 1]."""
        if self.waves != len(self.wave_losses):
            raise ValueError("waves must equal the number of recorded wave losses")
        if any(not 0.0 <= loss <= 1.0 for loss in self.wave_losses):
            raise ValueError("wave losses must lie in [0, 1]")
        for previous, current in zip(self.wave_losses, self.wave_losses[1:]):
            if current <= previous:
                raise ValueError(f"wave losses must strictly increase, got {previous} -> {current}")
        return self

    @property
    def q_final(self) -> float:
        """Loss once the cascade has exhausted itself."""
        return self.wave_losses[-1]

    model_config = ConfigDict(frozen=True)


class EnsembleSummary(BaseModel):
    """Moments and quantiles of the final loss across trials."""

    mean: float
    variance: float = Field(..., ge=0.0)
    quantiles: dict[float, float]

    model_config = ConfigDict(frozen=True)


class EnsembleResult(BaseModel):
    """All trials of an ensemble run, in trial-index order."""

    config: NetworkConfig
    results: list[TrialResult]
    summary: EnsembleSummary
    ks_vs_analytic: float | None = Field(default=None, ge=0.0)

    @model_validator(mode="after")
    def validate_results(self) -> Self:
        """Check that every trial is present exactly once and in order."""
        if [result.trial for result in self.results] != list(range(self.config.trials)):
            raise ValueError("results must hold trials 0..trials-1 in order")
        return self

    @property
    def samples(self) -> list[float]:
        """Final losses, one per trial."""
        return [result.q_final for result in self.results]

    model_config = ConfigDict(frozen=True)
