"""Correlated one-factor shocks to the asset side of every balance sheet."""

from dataclasses import dataclass

import numpy as np

from netcascade.models.network import NetworkConfig


@dataclass(frozen=True)
class ShockDraw:
    """Market factor and the post-shock assets A_{i,1} it produced."""

    z: float
    returns: np.ndarray
    post_shock_assets: np.ndarray


def trial_generator(master_seed: int, trial: int) -> np.random.Generator:
    """Independent stream for one trial, keyed by (master_seed, trial).

    Philox is counter-based and the spawn key makes each trial's stream a
    pure function of its index, so trials can run in any order.
    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(master_seed, spawn_key=(trial,))))


def sample_shocks(config: NetworkConfig, rng: np.random.Generator, z: float | None = None) -> ShockDraw:
    """Draw Z and n idiosyncratic factors and apply R_i = mu + sigma*(sqrt(rho)*Z + sqrt(1-rho)*eps_i).

    Z is drawn before the idiosyncratic factors. Passing z conditions the
    trial on a fixed market draw; the stream then supplies only the eps_i.

    Args:
        config: Network configuration
        rng: Stream for this trial
        z: Optional fixed market factor

    Returns:
        ShockDraw with A_{i,1} = A_i * exp(R_i)
    """
    market = float(rng.standard_normal()) if z is None else float(z)
    idiosyncratic = rng.standard_normal(config.n)
    returns = config.mu + config.sigma * (
        np.sqrt(config.rho) * market + np.sqrt(1.0 - config.rho) * idiosyncratic
    )
    return ShockDraw(
        z=market,
        returns=returns,
        post_shock_assets=config.asset_vector() * np.exp(returns),
    )
