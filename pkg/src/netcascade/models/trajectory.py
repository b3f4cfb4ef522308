"""Result models for orbits, fixed points and the fold geometry of the cascade map."""

import math
from typing import NamedTuple, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from netcascade.kernel import std_normal_cdf
from netcascade.models.constants import KAPPA_0, Regime, Stability

# Slack for float rounding when checking orbit monotonicity
_MONOTONE_SLACK = 1e-12


class OrbitStep(NamedTuple):
    """One default wave: its index, threshold and cumulative loss."""

    k: int
    delta_k: float
    q_k: float


class CascadeTrajectory(BaseModel):
    """Orbit delta_1, F(delta_1), F(F(delta_1)), ... of the cascade map.

    Thresholds are stored as a flat tuple; an orbit near a fold can run for a
    million iterations, so steps are materialised lazily.
    """

    deltas: tuple[float, ...] = Field(..., min_length=1, description="delta_k for k = 1, 2, ...")
    converged: bool
    delta_inf: float | None = Field(default=None, description="Orbit limit when converged")
    iterations_used: int = Field(..., ge=0)

    @model_validator(mode="after")
    def validate_orbit(self) -> Self:
        """Check that the orbit is nondecreasing and that the limit matches convergence."""
        for previous, current in zip(self.deltas, self.deltas[1:]):
            if current < previous - _MONOTONE_SLACK * max(1.0, abs(previous)):
                raise ValueError(f"orbit must be nondecreasing, got {previous} -> {current}")
        if self.converged != (self.delta_inf is not None):
            raise ValueError("delta_inf must be present exactly when the orbit converged")
        return self

    @property
    def steps(self) -> list[OrbitStep]:
        """Waves as (k, delta_k, q_k) triples."""
        return [
            OrbitStep(k=index, delta_k=delta, q_k=std_normal_cdf(delta))
            for index, delta in enumerate(self.deltas, start=1)
        ]

    @property
    def last(self) -> float:
        """Last computed iterate, whether or not the orbit converged."""
        return self.deltas[-1]

    model_config = ConfigDict(frozen=True)


class Basin(BaseModel):
    """Basin of attraction (lo, hi) of a stable fixed point."""

    point: float
    lo: float
    hi: float

    model_config = ConfigDict(frozen=True)


class FixedPointSet(BaseModel):
    """All solutions of x = delta_1 + kappa*N(x), sorted, with stability labels."""

    points: tuple[float, ...] = Field(..., min_length=1, max_length=3)
    stability: tuple[Stability, ...]
    selected: float = Field(..., description="Cascade limit delta_inf for the given delta_1")

    @model_validator(mode="after")
    def validate_points(self) -> Self:
        """Check ordering, label count and the stable/unstable alternation."""
        if len(self.points) != len(self.stability):
            raise ValueError("every fixed point needs exactly one stability label")
        if list(self.points) != sorted(self.points):
            raise ValueError(f"fixed points must be sorted, got {self.points}")
        if len(self.points) == 3 and self.stability != (
            Stability.STABLE,
            Stability.UNSTABLE,
            Stability.STABLE,
        ):
            raise ValueError(f"three fixed points must alternate stability, got {self.stability}")
        if self.selected not in self.points:
            raise ValueError("selected point must be one of the fixed points")
        return self

    def basins(self) -> list[Basin]:
        """Basins of attraction of the stable points.

        Unstable and neutral points separate the basins; the outermost basins
        extend to infinity.
        """
        separators = [
            point
            for point, label in zip(self.points, self.stability)
            if label != Stability.STABLE
        ]
        basins: list[Basin] = []
        for point, label in zip(self.points, self.stability):
            if label != Stability.STABLE:
                continue
            lo = max((s for s in separators if s < point), default=-math.inf)
            hi = min((s for s in separators if s > point), default=math.inf)
            basins.append(Basin(point=point, lo=lo, hi=hi))
        return basins

    model_config = ConfigDict(frozen=True)


class BifurcationGeometry(BaseModel):
    """Fold thresholds of f(x) = x - kappa*N(x).

    In the multi regime f has a local maximum at x_1 = -x_0 and a local
    minimum at x_0; y_1 = f(x_1) and y_0 = f(x_0) bound the delta_1 interval
    with three fixed points, and x_2 > x_0 is where f climbs back to y_1.
    """

    kappa: float = Field(..., ge=0.0)
    kappa_0: float = KAPPA_0
    regime: Regime
    x_0: float | None = None
    x_1: float | None = None
    y_0: float | None = None
    y_1: float | None = None
    x_2: float | None = None

    @model_validator(mode="after")
    def validate_geometry(self) -> Self:
        """Check that the multi regime carries a consistent, ordered geometry."""
        values = (self.x_0, self.x_1, self.y_0, self.y_1, self.x_2)
        if self.regime == Regime.SINGLE:
            if any(value is not None for value in values):
                raise ValueError("single regime carries no fold geometry")
            return self
        if any(value is None for value in values):
            raise ValueError("multi regime requires x_0, x_1, y_0, y_1 and x_2")
        assert self.x_0 is not None and self.x_1 is not None and self.x_2 is not None
        assert self.y_0 is not None and self.y_1 is not None
        if not self.x_1 < 0.0 < self.x_0 < self.x_2:
            raise ValueError(
                f"expected x_1 < 0 < x_0 < x_2, got {self.x_1}, {self.x_0}, {self.x_2}",
            )
        if not self.y_0 < self.y_1:
            raise ValueError(f"expected y_0 < y_1, got {self.y_0}, {self.y_1}")
        return self

    @property
    def is_multi(self) -> bool:
        """True when three fixed points are possible."""
        return self.regime == Regime.MULTI

    model_config = ConfigDict(frozen=True)


class CascadeSolution(BaseModel):
    """Direct, total and systemic loss of one scenario."""

    delta_1: float
    kappa: float
    delta_inf: float
    q_1: float = Field(..., ge=0.0, le=1.0)
    q_inf: float = Field(..., ge=0.0, le=1.0)
    regime: Regime
    fixed_points: FixedPointSet
    geometry: BifurcationGeometry

    @property
    def systemic_loss(self) -> float:
        """Loss generated by the price feedback on top of the direct loss."""
        return self.q_inf - self.q_1

    model_config = ConfigDict(frozen=True)
