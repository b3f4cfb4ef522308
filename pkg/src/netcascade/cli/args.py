"""Command-line argument parsing for the CLI."""

import argparse
from collections.abc import Sequence
from pathlib import Path

from netcascade.models.constants import Subcommand

EPILOG = """
Examples:
  # Direct, total and systemic loss for one market draw
  netcascade solve --q 0.05 --rho 0.2 --sigma 0.25 --a 0.2 --z 0

  # Fold geometry for a scan of fire-sale strengths
  netcascade bifurcation --kappa-min 0 --kappa-max 6 --kappa-steps 61

  # Total-loss distribution with the support gap annotated
  netcascade distribution --q 0.05 --rho 0.2 --kappa 4 --waves inf --output loss.csv

  # Monte Carlo versus analytic total loss
  netcascade compare --q 0.05 --rho 0.2 --sigma 0.25 --a 0.2 --n 10000 --trials 2000 --seed 42
"""


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    """Flags shared by every subcommand; unset flags stay None so file values survive."""
    parser.add_argument("--config", type=Path, default=None, help="JSON file with parameter values")

    model_group = parser.add_argument_group("Model")
    model_group.add_argument("--mu", type=float, default=None, help="Mean log asset return (default: 0)")
    model_group.add_argument("--sigma", type=float, default=None, help="Return volatility > 0 (default: 1)")
    model_group.add_argument("--rho", type=float, default=None, help="Asset correlation in [0, 1) (default: 0)")
    model_group.add_argument("--a", type=float, default=None, help="Fire-sale impact constant >= 0")
    model_group.add_argument("--assets", type=float, default=None, help="Pre-shock assets A > 0")
    model_group.add_argument("--liabilities", type=float, default=None, help="Liabilities L, 0 < L < A")
    model_group.add_argument("--q", type=float, default=None, help="Idiosyncratic default probability in (0, 1)")
    model_group.add_argument("--z", type=float, default=None, help="Market factor draw (default: 0)")
    model_group.add_argument(
        "--kappa",
        type=float,
        default=None,
        help="Fire-sale strength a / (sigma*sqrt(1-rho)); alternative to --a",
    )

    solver_group = parser.add_argument_group("Solver")
    solver_group.add_argument("--tol", type=float, default=None, help="Root/orbit tolerance > 0")
    solver_group.add_argument("--max-iter", type=int, default=None, help="Orbit iteration cap >= 1")
    solver_group.add_argument(
        "--require-converged",
        action="store_true",
        default=None,
        help="Fail with exit status 2 when the orbit does not converge",
    )
    solver_group.add_argument("--kappa-min", type=float, default=None, help="Bifurcation scan start")
    solver_group.add_argument("--kappa-max", type=float, default=None, help="Bifurcation scan end")
    solver_group.add_argument("--kappa-steps", type=int, default=None, help="Bifurcation scan points >= 2")

    distribution_group = parser.add_argument_group("Distribution")
    distribution_group.add_argument("--waves", type=str, default=None, help="Wave index k >= 1 or 'inf' (default)")
    distribution_group.add_argument("--grid-points", type=int, default=None, help="Tabulation points >= 2")
    distribution_group.add_argument("--x-min", type=float, default=None, help="Lowest loss level in (0, 1)")
    distribution_group.add_argument("--x-max", type=float, default=None, help="Highest loss level in (0, 1)")

    network_group = parser.add_argument_group("Network")
    network_group.add_argument("--n", type=int, default=None, help="Number of nodes >= 1")
    network_group.add_argument("--trials", type=int, default=None, help="Number of trials >= 1")
    network_group.add_argument("--seed", type=int, default=None, help="Master seed in [0, 2^64)")
    network_group.add_argument("--workers", type=int, default=None, help="Worker processes >= 1")

    output_group = parser.add_argument_group("Output Options")
    output_group.add_argument("--output", type=Path, default=None, help="Output CSV path (default: stdout)")
    output_group.add_argument("--quiet", action="store_true", help="Suppress progress messages")
    output_group.add_argument("--verbose", action="store_true", help="Enable verbose logging")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per subcommand."""
    parser = argparse.ArgumentParser(
        prog="netcascade",
        description="Default cascades in banking networks: analytic solver and Monte Carlo simulator",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    helps = {
        Subcommand.SOLVE: "Direct, total and systemic loss for one market draw",
        Subcommand.ORBIT: "Wave-by-wave orbit of the cascade map",
        Subcommand.FIXED_POINTS: "Fixed points, stability and basins of attraction",
        Subcommand.BIFURCATION: "Fold geometry for one kappa or a scan",
        Subcommand.DISTRIBUTION: "Tabulated loss CDF and PDF",
        Subcommand.SIMULATE: "Monte Carlo ensemble on a finite network",
        Subcommand.COMPARE: "Monte Carlo ensemble against the analytic total loss",
    }
    for subcommand, help_text in helps.items():
        subparser = subparsers.add_parser(
            subcommand.value,
            help=help_text,
            description=help_text,
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        _add_common_arguments(subparser)
    return parser


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    """Parse command-line arguments.

    Args:
        argv: Argument list (default: sys.argv[1:])

    Returns:
        Parsed arguments namespace
    """
    return build_parser().parse_args(argv)
