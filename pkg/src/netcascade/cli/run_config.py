"""Run configuration: JSON config file merged with command-line flags."""

import argparse
import json
import logging
from pathlib import Path
from typing import Any, Self

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from netcascade.models.constants import Subcommand, WaveIndex, WaveLimit

logger = logging.getLogger(__name__)

# argparse destinations that are not run parameters
_NON_PARAMETER_FLAGS = frozenset({"config", "quiet", "verbose", "subcommand"})


class RunConfig(BaseModel):
    """Validated parameters of one CLI run.

    Field names double as JSON config keys. Ranges that depend on the
    subcommand (for example rho > 0 for distributions) are enforced by the
    domain models the runner builds from this config.
    """

    subcommand: Subcommand
    mu: float = 0.0
    sigma: float = Field(default=1.0, gt=0.0)
    rho: float = Field(default=0.0, ge=0.0, lt=1.0)
    a: float | None = Field(default=None, ge=0.0)
    assets: float | None = Field(default=None, gt=0.0)
    liabilities: float | None = Field(default=None, gt=0.0)
    q: float | None = Field(default=None, gt=0.0, lt=1.0)
    z: float = 0.0
    kappa: float | None = Field(default=None, ge=0.0)
    kappa_min: float | None = Field(default=None, ge=0.0)
    kappa_max: float | None = Field(default=None, ge=0.0)
    kappa_steps: int | None = Field(default=None, ge=2)
    tol: float | None = Field(default=None, gt=0.0)
    max_iter: int | None = Field(default=None, ge=1)
    require_converged: bool = False
    waves: WaveIndex = WaveLimit.INFINITE
    grid_points: int | None = Field(default=None, ge=2)
    x_min: float | None = Field(default=None, gt=0.0, lt=1.0)
    x_max: float | None = Field(default=None, gt=0.0, lt=1.0)
    n: int = Field(default=1000, ge=1)
    trials: int = Field(default=1000, ge=1)
    seed: int = Field(default=0, ge=0, lt=2**64)
    workers: int | None = Field(default=None, ge=1)
    output: Path | None = None

    @field_validator("waves", mode="before")
    @classmethod
    def parse_waves(cls, value: Any) -> Any:
        """Accept 'inf' or a positive integer, as a string or a number."""
        if isinstance(value, str):
            cleaned = value.strip().lower()
            if cleaned == WaveLimit.INFINITE:
                return WaveLimit.INFINITE
            try:
                return int(cleaned)
            except ValueError as error:
                raise ValueError(f"waves must be a positive integer or 'inf', got {value!r}") from error
        return value

    @field_validator("waves")
    @classmethod
    def validate_waves(cls, value: WaveIndex) -> WaveIndex:
        """Validate that a finite wave index is at least 1."""
        if isinstance(value, int) and value < 1:
            raise ValueError(f"waves must be >= 1 or 'inf', got {value}")
        return value

    @model_validator(mode="after")
    def validate_ranges(self) -> Self:
        """Check the paired bounds."""
        if self.x_min is not None and self.x_max is not None and not self.x_min < self.x_max:
            raise ValueError(f"x_min must be below x_max, got {self.x_min} and {self.x_max}")
        scan = (self.kappa_min, self.kappa_max, self.kappa_steps)
        if any(value is not None for value in scan) and any(value is None for value in scan):
            raise ValueError("kappa_min, kappa_max and kappa_steps must be given together")
        if self.kappa_min is not None and self.kappa_max is not None and self.kappa_min > self.kappa_max:
            raise ValueError(f"kappa_min must not exceed kappa_max, got {self.kappa_min} and {self.kappa_max}")
        return self

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)


def load_config_file(path: Path) -> dict[str, Any]:
    """Load a JSON config file into a dict of parameter values.

    Raises:
        FileNotFoundError: If the file does not exist
        ValueError: If the file is not a JSON object
    """
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as error:
        raise ValueError(f"Config file {path} is not valid JSON: {error}") from error
    if not isinstance(data, dict):
        raise ValueError(f"Config file {path} must contain a JSON object")
    logger.debug(f"Loaded {len(data)} keys from {path}")
    return data


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """Merge the optional JSON config file with flags; flags that were given win.

    Raises:
        FileNotFoundError: If --config names a missing file
        ValueError: If the merged parameters do not validate
    """
    values: dict[str, Any] = load_config_file(args.config) if args.config is not None else {}
    for name, value in vars(args).items():
        if name in _NON_PARAMETER_FLAGS or value is None:
            continue
        values[name] = value
    values["subcommand"] = args.subcommand
    return RunConfig(**values)


def format_validation_error(error: ValidationError) -> str:
    """Render a pydantic error as 'field: message (got value)' lines."""
    lines = []
    for detail in error.errors():
        if not detail["loc"]:
            lines.append(detail["msg"])
            continue
        field = ".".join(str(part) for part in detail["loc"])
        lines.append(f"{field}: {detail['msg']} (got {detail.get('input')!r})")
    return "; ".join(lines)
