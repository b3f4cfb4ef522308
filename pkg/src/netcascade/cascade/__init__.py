"""Cascade map, orbits, fixed points, fold geometry and loss-linking functions."""

from netcascade.cascade.bifurcation import bifurcation_geometry, fold_location
from netcascade.cascade.fixed_points import fixed_points
from netcascade.cascade.functions import (
    g_k,
    g_k_prime,
    h,
    h_k,
    h_k_prime,
    h_prime,
    inverse_wave_map,
    inverse_wave_map_prime,
    total_loss_map_g,
)
from netcascade.cascade.maps import fixed_point_function, map_F
from netcascade.cascade.orbit import run_orbit
from netcascade.cascade.scenario import derive_scenario
from netcascade.cascade.solve import solve_scenario

__all__ = [
    "bifurcation_geometry",
    "derive_scenario",
    "fixed_point_function",
    "fixed_points",
    "fold_location",
    "g_k",
    "g_k_prime",
    "h",
    "h_k",
    "h_k_prime",
    "h_prime",
    "inverse_wave_map",
    "inverse_wave_map_prime",
    "map_F",
    "run_orbit",
    "solve_scenario",
    "total_loss_map_g",
]
