"""Economic inputs of the cascade model and the per-scenario quantities derived from them."""

import math
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from netcascade.kernel import std_normal_cdf


class ModelParams(BaseModel):
    """Economic inputs of the homogeneous cascade model.

    The balance side is given either as a balance sheet (assets, liabilities)
    or directly as the idiosyncratic default probability q. Exactly one of the
    two parameterizations must be supplied; both reduce to the same
    (delta_1, kappa) pair downstream.
    """

    mu: float = Field(default=0.0, description="Mean log asset return")
    sigma: float = Field(..., gt=0.0, description="Log return volatility")
    rho: float = Field(..., description="Asset correlation, in [0, 1)")
    a: float = Field(..., ge=0.0, description="Fire-sale impact constant")
    assets: float | None = Field(default=None, gt=0.0, description="Pre-shock assets A")
    liabilities: float | None = Field(default=None, description="Liabilities L, 0 < L < A")
    idiosyncratic_q: float | None = Field(
        default=None,
        description="Single-node default probability at zero correlation, in (0, 1)",
    )

    @field_validator("rho")
    @classmethod
    def validate_rho(cls, value: float) -> float:
        """Validate that rho lies in [0, 1); rho = 1 leaves no idiosyncratic noise."""
        if not 0.0 <= value < 1.0:
            raise ValueError(f"rho must be in [0, 1), got {value}")
        return value

    @field_validator("idiosyncratic_q")
    @classmethod
    def validate_q(cls, value: float | None) -> float | None:
        """Validate that q lies in the open interval (0, 1)."""
        if value is not None and not 0.0 < value < 1.0:
            raise ValueError(f"idiosyncratic_q must be in (0, 1), got {value}")
        return value

    @model_validator(mode="after")
    def validate_balance(self) -> Self:
        """Require exactly one parameterization and an initially solvent balance sheet."""
        has_sheet = self.assets is not None or self.liabilities is not None
        if has_sheet and self.idiosyncratic_q is not None:
            raise ValueError("give either assets/liabilities or idiosyncratic_q, not both")
        if not has_sheet and self.idiosyncratic_q is None:
            raise ValueError("one of assets/liabilities or idiosyncratic_q is required")
        if has_sheet:
            if self.assets is None or self.liabilities is None:
                raise ValueError("assets and liabilities must be given together")
            if not 0.0 < self.liabilities < self.assets:
                raise ValueError(
                    f"liabilities must satisfy 0 < L < A (nodes start solvent), "
                    f"got L={self.liabilities}, A={self.assets}",
                )
        return self

    @property
    def alpha(self) -> float:
        """Idiosyncratic return scale sigma * sqrt(1 - rho)."""
        return self.sigma * math.sqrt(1.0 - self.rho)

    @property
    def kappa(self) -> float:
        """Fire-sale strength in units of the idiosyncratic scale."""
        return self.a / self.alpha

    def idiosyncratic_probability(self) -> float:
        """Default probability of a single node at zero correlation.

        For the balance-sheet parameterization this is N((ln(L/A) - mu) / sigma).
        """
        if self.idiosyncratic_q is not None:
            return self.idiosyncratic_q
        assert self.assets is not None and self.liabilities is not None
        return std_normal_cdf((math.log(self.liabilities / self.assets) - self.mu) / self.sigma)

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)


class ScenarioParams(BaseModel):
    """Quantities derived from ModelParams for one draw of the market factor Z.

    ``alpha``, ``beta`` and ``z`` are absent when the scenario was built directly
    from the reduced pair (delta_1, kappa).
    """

    delta_1: float = Field(..., description="First-wave default threshold")
    kappa: float = Field(..., ge=0.0, description="Fire-sale strength a / alpha")
    alpha: float | None = Field(default=None, gt=0.0, description="sigma * sqrt(1 - rho)")
    beta: float | None = Field(default=None, description="mu + sigma * sqrt(rho) * Z")
    z: float | None = Field(default=None, description="Market factor draw")

    @classmethod
    def from_reduced(cls, delta_1: float, kappa: float) -> "ScenarioParams":
        """Create a scenario from the reduced pair the cascade map depends on."""
        return cls(delta_1=delta_1, kappa=kappa)

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)
