"""Application settings and numerical defaults."""

import logging
from enum import Enum

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class LogLevel(str, Enum):
    """Logging level options."""

    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class Settings(BaseSettings):
    """Application settings loaded from environment variables or defaults.

    Settings can be configured via environment variables with the prefix
    'NETCASCADE_'. For example, NETCASCADE_ROOT_TOL sets the root_tol used by
    every bracketed root search that is not given an explicit tolerance.
    """

    model_config = SettingsConfigDict(
        env_prefix="NETCASCADE_",
        case_sensitive=False,
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Logging configuration
    log_level: LogLevel = Field(
        default=LogLevel.INFO,
        description="Logging level for the application",
    )
    log_format: str = Field(
        default="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        description="Log message format",
    )
    log_date_format: str = Field(
        default="%Y-%m-%d %H:%M:%S",
        description="Date format for log messages",
    )

    # Solver tolerances
    root_tol: float = Field(
        default=1e-12,
        gt=0.0,
        le=1e-3,
        description="Absolute tolerance for bracketed root searches",
    )
    orbit_tol: float = Field(
        default=1e-12,
        gt=0.0,
        le=1e-3,
        description="Orbit stops once successive iterates differ by less than this",
    )
    orbit_max_iter: int = Field(
        default=1_000_000,
        ge=1,
        description="Iteration cap for the cascade orbit",
    )
    scan_points: int = Field(
        default=2001,
        ge=3,
        description="Uniform scan samples used to bracket fixed points",
    )
    bracket_expansions: int = Field(
        default=60,
        ge=1,
        description="Doubling steps allowed when widening an inverse-map bracket",
    )

    # Loss distributions
    domain_clamp: float = Field(
        default=1e-10,
        gt=0.0,
        lt=1e-3,
        description="Loss levels within this distance of 0 or 1 are treated as the endpoints",
    )
    grid_points: int = Field(
        default=201,
        ge=2,
        description="Default number of tabulation points",
    )
    x_min: float = Field(default=1e-4, gt=0.0, lt=1.0, description="Default lower tabulation bound")
    x_max: float = Field(default=0.999, gt=0.0, lt=1.0, description="Default upper tabulation bound")

    # Simulation
    workers: int = Field(
        default=1,
        ge=1,
        le=256,
        description="Worker processes used by the ensemble runner",
    )

    # Output
    csv_significant_digits: int = Field(
        default=17,
        ge=1,
        le=17,
        description="Significant digits written for every number in CSV output",
    )

    @field_validator("log_level", mode="before")
    @classmethod
    def validate_log_level(cls, value: str | LogLevel) -> LogLevel:
        """Validate and convert log level string to enum."""
        if isinstance(value, LogLevel):
            return value
        if isinstance(value, str):
            try:
                return LogLevel[value.upper()]
            except KeyError as error:
                raise ValueError(
                    f"Invalid log level: {value}. "
                    f"Must be one of {[level.name for level in LogLevel]}",
                ) from error
        raise ValueError(f"Invalid log level: {value}")

    @property
    def logging_level_int(self) -> int:
        """Get the integer logging level for Python's logging module."""
        return logging.getLevelNamesMapping()[self.log_level.value]


_settings_instance: Settings | None = None


def get_settings() -> Settings:
    """Get the singleton settings instance.

    Returns:
        Settings instance
    """
    global _settings_instance
    if _settings_instance is None:
        _settings_instance = Settings()
    return _settings_instance
