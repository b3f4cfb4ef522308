"""Dispatch of a validated RunConfig to the solver and the simulator."""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from functools import partial

import numpy as np

from netcascade.cascade import (
    bifurcation_geometry,
    derive_scenario,
    fixed_points,
    run_orbit,
    solve_scenario,
)
from netcascade.cli.formatter import (
    bifurcation_csv,
    distribution_csv,
    fixed_points_csv,
    format_summary,
    key_value_csv,
    orbit_csv,
    simulate_csv,
)
from netcascade.cli.run_config import RunConfig
from netcascade.distributions import loss_cdf, loss_mean, tabulate
from netcascade.errors import DomainError, NumericalError
from netcascade.kernel import std_normal_cdf
from netcascade.models.constants import CSVColumn, Subcommand, WaveIndex, WaveLimit
from netcascade.models.distribution import DistributionSpec
from netcascade.models.network import EnsembleResult, NetworkConfig
from netcascade.models.params import ModelParams
from netcascade.models.trajectory import BifurcationGeometry
from netcascade.simulator import run_ensemble

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunOutput:
    """CSV body for the output file or stdout, and the one-line summary for stderr."""

    csv: str
    summary: str


def model_params(config: RunConfig) -> ModelParams:
    """Build ModelParams; --kappa stands in for --a via a = kappa*sigma*sqrt(1-rho).

    Raises:
        DomainError: If neither or both of a and kappa are given
        ValueError: If the parameters fail validation
    """
    if config.a is not None and config.kappa is not None:
        raise DomainError("a and kappa: give one of them, not both")
    if config.a is None and config.kappa is None:
        raise DomainError("a: required (>= 0), or give kappa (>= 0) instead")
    a = config.a if config.a is not None else config.kappa * config.sigma * math.sqrt(1.0 - config.rho)
    return ModelParams(
        mu=config.mu,
        sigma=config.sigma,
        rho=config.rho,
        a=a,
        assets=config.assets,
        liabilities=config.liabilities,
        idiosyncratic_q=config.q,
    )


def _geometry_fields(geometry: BifurcationGeometry) -> dict[str, float | str | None]:
    fields: dict[str, float | str | None] = {"regime": geometry.regime.value}
    if geometry.is_multi:
        fields.update({"y0": geometry.y_0, "y1": geometry.y_1, "x2": geometry.x_2})
    return fields


def _solve(config: RunConfig) -> RunOutput:
    solution = solve_scenario(model_params(config), config.z, tol=config.tol)
    values = {
        "delta_1": solution.delta_1,
        "kappa": solution.kappa,
        "delta_inf": solution.delta_inf,
        "q_1": solution.q_1,
        "q_inf": solution.q_inf,
        "systemic_loss": solution.systemic_loss,
        "regime": solution.regime.value,
        "fixed_points": len(solution.fixed_points.points),
    }
    summary = {key: values[key] for key in ("delta_1", "kappa", "delta_inf", "q_1", "q_inf")}
    summary.update(_geometry_fields(solution.geometry))
    return RunOutput(csv=key_value_csv(values), summary=format_summary(summary))


def _orbit(config: RunConfig) -> RunOutput:
    scenario = derive_scenario(model_params(config), config.z)
    trajectory = run_orbit(scenario, tol=config.tol, max_iter=config.max_iter)
    if config.require_converged and not trajectory.converged:
        raise NumericalError(
            f"orbit did not converge within {trajectory.iterations_used} iterations "
            f"(last iterate {trajectory.last})",
        )
    summary = {
        "delta_1": scenario.delta_1,
        "kappa": scenario.kappa,
        "delta_inf": trajectory.delta_inf,
        "q_inf": None if trajectory.delta_inf is None else std_normal_cdf(trajectory.delta_inf),
        "converged": trajectory.converged,
        "iterations": trajectory.iterations_used,
    }
    summary.update(_geometry_fields(bifurcation_geometry(scenario.kappa)))
    return RunOutput(csv=orbit_csv(trajectory), summary=format_summary(summary))


def _fixed_points(config: RunConfig) -> RunOutput:
    scenario = derive_scenario(model_params(config), config.z)
    points = fixed_points(scenario, tol=config.tol)
    summary: dict[str, float | str | int | None] = {
        "delta_1": scenario.delta_1,
        "kappa": scenario.kappa,
        "delta_inf": points.selected,
        "count": len(points.points),
    }
    summary.update(_geometry_fields(bifurcation_geometry(scenario.kappa)))
    return RunOutput(csv=fixed_points_csv(points), summary=format_summary(summary))


def _kappa_values(config: RunConfig) -> list[float]:
    if config.kappa_steps is not None:
        assert config.kappa_min is not None and config.kappa_max is not None
        return [float(value) for value in np.linspace(config.kappa_min, config.kappa_max, config.kappa_steps)]
    if config.kappa is not None:
        return [config.kappa]
    if config.a is not None:
        return [config.a / (config.sigma * math.sqrt(1.0 - config.rho))]
    raise DomainError("kappa: required (>= 0); give kappa, a, or kappa_min/kappa_max/kappa_steps")


def _bifurcation(config: RunConfig) -> RunOutput:
    geometries = [bifurcation_geometry(kappa, tol=config.tol) for kappa in _kappa_values(config)]
    multi = sum(1 for geometry in geometries if geometry.is_multi)
    summary: dict[str, float | str | int | None] = {
        "kappa_0": geometries[0].kappa_0,
        "points": len(geometries),
        "multi": multi,
    }
    if len(geometries) == 1:
        summary.update(_geometry_fields(geometries[0]))
    return RunOutput(csv=bifurcation_csv(geometries), summary=format_summary(summary))


def _distribution_spec(config: RunConfig, wave: WaveIndex) -> DistributionSpec:
    return DistributionSpec.from_model(model_params(config), wave)


def _distribution(config: RunConfig) -> RunOutput:
    spec = _distribution_spec(config, config.waves)
    curve = tabulate(spec, grid_points=config.grid_points, x_min=config.x_min, x_max=config.x_max)
    summary: dict[str, float | str | int | None] = {
        "q": spec.idiosyncratic_q,
        "rho": spec.rho,
        "kappa": spec.kappa,
        "waves": str(spec.wave),
    }
    if curve.gap is not None and curve.jump is not None:
        summary.update({"gap_lo": curve.gap.lo, "gap_hi": curve.gap.hi, "jump_at": curve.jump.at})
    return RunOutput(csv=distribution_csv(curve), summary=format_summary(summary))


def _ensemble(config: RunConfig, analytic_cdf: Callable[[float], float] | None = None) -> EnsembleResult:
    network = NetworkConfig.from_model(model_params(config), n=config.n, trials=config.trials, master_seed=config.seed)
    return run_ensemble(network, analytic_cdf=analytic_cdf, workers=config.workers)


def _ensemble_summary(ensemble: EnsembleResult) -> dict[str, float | str | int | None]:
    values: dict[str, float | str | int | None] = {
        "trials": ensemble.config.trials,
        "n": ensemble.config.n,
        "mean": ensemble.summary.mean,
        "variance": ensemble.summary.variance,
    }
    values.update({f"q{level:g}": value for level, value in ensemble.summary.quantiles.items()})
    return values


def _simulate(config: RunConfig) -> RunOutput:
    ensemble = _ensemble(config)
    return RunOutput(csv=simulate_csv(ensemble), summary=format_summary(_ensemble_summary(ensemble)))


def _compare(config: RunConfig) -> RunOutput:
    spec = _distribution_spec(config, WaveLimit.INFINITE)
    ensemble = _ensemble(config, analytic_cdf=partial(loss_cdf, spec=spec))
    values = {
        "ks": ensemble.ks_vs_analytic,
        "analytic_mean": loss_mean(spec, tol=config.tol),
        **_ensemble_summary(ensemble),
    }
    return RunOutput(
        csv=key_value_csv(values, key_column=CSVColumn.STATISTIC),
        summary=format_summary({"kappa": spec.kappa, **values}),
    )


_HANDLERS: dict[Subcommand, Callable[[RunConfig], RunOutput]] = {
    Subcommand.SOLVE: _solve,
    Subcommand.ORBIT: _orbit,
    Subcommand.FIXED_POINTS: _fixed_points,
    Subcommand.BIFURCATION: _bifurcation,
    Subcommand.DISTRIBUTION: _distribution,
    Subcommand.SIMULATE: _simulate,
    Subcommand.COMPARE: _compare,
}


def execute(config: RunConfig) -> RunOutput:
    """Run the subcommand named by config.

    Raises:
        DomainError, ValueError: Invalid parameters (exit status 1)
        NumericalError: Numerical failure (exit status 2)
    """
    logger.debug(f"Executing {config.subcommand} with {config.model_dump(exclude_none=True)}")
    return _HANDLERS[config.subcommand](config)
