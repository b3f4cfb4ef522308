"""Models for the analytic loss distributions."""

from typing import Self

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from netcascade.models.constants import WaveIndex, WaveLimit
from netcascade.models.params import ModelParams


class DistributionSpec(BaseModel):
    """Arguments (q, rho, kappa, k) of the loss distribution after k default waves."""

    idiosyncratic_q: float = Field(..., gt=0.0, lt=1.0, description="Idiosyncratic default probability")
    rho: float = Field(..., gt=0.0, lt=1.0, description="Asset correlation, open interval (0, 1)")
    kappa: float = Field(default=0.0, ge=0.0, description="Fire-sale strength")
    wave: WaveIndex = Field(default=WaveLimit.INFINITE, description="Wave index k or 'inf'")

    @field_validator("wave", mode="before")
    @classmethod
    def parse_wave(cls, value: object) -> object:
        """Accept 'inf' in any case and numeric strings for the wave index."""
        if isinstance(value, str):
            cleaned = value.strip().lower()
            if cleaned == WaveLimit.INFINITE:
                return WaveLimit.INFINITE
            if cleaned.isdigit():
                return int(cleaned)
        return value

    @field_validator("wave")
    @classmethod
    def validate_wave(cls, value: WaveIndex) -> WaveIndex:
        """Validate that a finite wave index is at least 1."""
        if isinstance(value, int) and value < 1:
            raise ValueError(f"wave must be >= 1 or 'inf', got {value}")
        return value

    @classmethod
    def vasicek(cls, idiosyncratic_q: float, rho: float) -> "DistributionSpec":
        """Direct-loss spec: no fire sales, first wave only."""
        return cls(idiosyncratic_q=idiosyncratic_q, rho=rho, kappa=0.0, wave=1)

    @classmethod
    def from_model(cls, params: ModelParams, wave: WaveIndex = WaveLimit.INFINITE) -> "DistributionSpec":
        """Build a spec from economic inputs in either parameterization."""
        return cls(
            idiosyncratic_q=params.idiosyncratic_probability(),
            rho=params.rho,
            kappa=params.kappa,
            wave=wave,
        )

    @property
    def is_infinite(self) -> bool:
        """True for the total-loss (exhausted cascade) distribution."""
        return self.wave == WaveLimit.INFINITE

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)


class LossPoint(BaseModel):
    """CDF and PDF of the loss at one level x."""

    x: float = Field(..., gt=0.0, lt=1.0)
    cdf: float = Field(..., ge=0.0, le=1.0)
    pdf: float = Field(..., ge=0.0)

    model_config = ConfigDict(frozen=True)


class LossGap(BaseModel):
    """Loss interval (N(x_1), N(x_2)) the total loss never occupies."""

    lo: float
    hi: float

    model_config = ConfigDict(frozen=True)


class DensityJump(BaseModel):
    """Discontinuity of the total-loss PDF at N(x_2)."""

    at: float
    left_pdf: float = Field(..., ge=0.0)
    right_pdf: float = Field(..., ge=0.0)

    model_config = ConfigDict(frozen=True)


class LossCurve(BaseModel):
    """Tabulated loss distribution with its support gap and density jump."""

    spec: DistributionSpec
    points: list[LossPoint]
    gap: LossGap | None = None
    jump: DensityJump | None = None

    @model_validator(mode="after")
    def validate_curve(self) -> Self:
        """Check CDF monotonicity and that the gap carries no density."""
        for previous, current in zip(self.points, self.points[1:]):
            if current.x <= previous.x:
                raise ValueError("grid must be strictly increasing")
            if current.cdf < previous.cdf:
                raise ValueError(
                    f"cdf must be nondecreasing, got {previous.cdf} at {previous.x} "
                    f"and {current.cdf} at {current.x}",
                )
        if self.gap is not None:
            inside = [point for point in self.points if self.gap.lo < point.x < self.gap.hi]
            if any(point.pdf != 0.0 for point in inside):
                raise ValueError("pdf must vanish inside the support gap")
            if len({point.cdf for point in inside}) > 1:
                raise ValueError("cdf must be constant inside the support gap")
        return self

    model_config = ConfigDict(frozen=True)
