"""Wave-by-wave default cascade on a finite network."""

import logging

import numpy as np

from netcascade.errors import DomainError
from netcascade.models.network import TrialResult

logger = logging.getLogger(__name__)


def run_cascade(
    post_shock_assets: np.ndarray,
    liabilities: np.ndarray,
    a: float,
    z: float = 0.0,
    trial: int = 0,
) -> TrialResult:
    """Run the cascade triggered by one shock draw until no new node defaults.

    After wave k every surviving node's assets are A_{i,1} * exp(-a*q_k),
    always discounting the post-shock value rather than compounding. A node
    defaults once its discounted assets are at or below its liabilities,
    which is log(A_{i,1} / L_i) <= a*q_k. Defaults are absorbing, so sorting
    the log margins once turns each wave into a single search.

    Args:
        post_shock_assets: A_{i,1} for every node
        liabilities: L_i for every node
        a: Fire-sale impact constant, >= 0
        z: Market factor of the draw, recorded in the result
        trial: Trial index, recorded in the result

    Returns:
        TrialResult with the cumulative defaulted fraction after each wave

    Raises:
        DomainError: If a < 0 or the arrays do not match
    """
    if a < 0.0:
        raise DomainError(f"a must be >= 0, got {a}")
    post_shock_assets = np.asarray(post_shock_assets, dtype=np.float64)
    liabilities = np.asarray(liabilities, dtype=np.float64)
    if post_shock_assets.shape != liabilities.shape or post_shock_assets.ndim != 1:
        raise DomainError("post_shock_assets and liabilities must be 1-d arrays of equal length")

    n = post_shock_assets.size
    margins = np.sort(np.log(post_shock_assets) - np.log(liabilities))

    defaulted = int(np.searchsorted(margins, 0.0, side="right"))
    wave_losses = [defaulted / n]
    while defaulted < n:
        reached = int(np.searchsorted(margins, a * wave_losses[-1], side="right"))
        if reached == defaulted:
            break
        defaulted = reached
        wave_losses.append(defaulted / n)

    logger.debug(f"Trial {trial}: {len(wave_losses)} waves, q_final={wave_losses[-1]:.6g}")
    return TrialResult(trial=trial, z=z, wave_losses=tuple(wave_losses), waves=len(wave_losses))
