"""Finite-n Monte Carlo simulation of the default cascade."""

from netcascade.simulator.cascade import run_cascade
from netcascade.simulator.ensemble import run_ensemble, run_trial, summarize
from netcascade.simulator.ks import ks_distance
from netcascade.simulator.shocks import ShockDraw, sample_shocks, trial_generator

__all__ = [
    "ShockDraw",
    "ks_distance",
    "run_cascade",
    "run_ensemble",
    "run_trial",
    "sample_shocks",
    "summarize",
    "trial_generator",
]
