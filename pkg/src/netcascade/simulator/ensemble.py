"""Ensembles of independent cascade trials, optionally run in parallel."""

import logging
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from netcascade.config import settings
from netcascade.models.constants import SUMMARY_QUANTILES
from netcascade.models.network import EnsembleResult, EnsembleSummary, NetworkConfig, TrialResult
from netcascade.simulator.cascade import run_cascade
from netcascade.simulator.ks import ks_distance
from netcascade.simulator.shocks import sample_shocks, trial_generator

logger = logging.getLogger(__name__)


def run_trial(config: NetworkConfig, trial: int, z: float | None = None) -> TrialResult:
    """Run trial number `trial` on its own stream; z optionally fixes the market draw."""
    draw = sample_shocks(config, trial_generator(config.master_seed, trial), z=z)
    return run_cascade(draw.post_shock_assets, config.liability_vector(), config.a, z=draw.z, trial=trial)


def _run_chunk(config: NetworkConfig, trials: range) -> list[TrialResult]:
    return [run_trial(config, trial) for trial in trials]


def _chunks(total: int, parts: int) -> list[range]:
    size = -(-total // parts)
    return [range(start, min(start + size, total)) for start in range(0, total, size)]


def summarize(samples: list[float]) -> EnsembleSummary:
    """Mean, population variance and the SUMMARY_QUANTILES of the final losses."""
    values = np.asarray(samples, dtype=np.float64)
    return EnsembleSummary(
        mean=float(values.mean()),
        variance=float(values.var()),
        quantiles={level: float(np.quantile(values, level)) for level in SUMMARY_QUANTILES},
    )


def run_ensemble(
    config: NetworkConfig,
    analytic_cdf: Callable[[float], float] | None = None,
    workers: int | None = None,
) -> EnsembleResult:
    """Run config.trials independent cascades.

    Trial i always uses the stream keyed by (master_seed, i) and results are
    collected in trial order, so the output is identical for any worker count.

    Args:
        config: Network and ensemble configuration
        analytic_cdf: Optional CDF on (0, 1) to compute the KS distance against
        workers: Worker processes (default: settings.workers); 1 runs in-process

    Returns:
        EnsembleResult with per-trial results, summary and optional KS distance
    """
    workers = settings.workers if workers is None else workers
    workers = max(1, min(workers, config.trials))
    logger.info(
        f"Running {config.trials} trials on n={config.n} nodes "
        f"(seed={config.master_seed}, workers={workers})",
    )

    if workers == 1:
        results = _run_chunk(config, range(config.trials))
    else:
        chunks = _chunks(config.trials, workers)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            batches = executor.map(_run_chunk, [config] * len(chunks), chunks)
            results = [result for batch in batches for result in batch]

    samples = [result.q_final for result in results]
    ks = ks_distance(samples, analytic_cdf) if analytic_cdf is not None else None
    ensemble = EnsembleResult(config=config, results=results, summary=summarize(samples), ks_vs_analytic=ks)
    logger.info(
        f"Ensemble mean q_final={ensemble.summary.mean:.6g}"
        + (f", KS={ks:.6g}" if ks is not None else ""),
    )
    return ensemble
