"""CSV and summary-line formatting for CLI output."""

import math
from collections.abc import Mapping, Sequence

import polars as pl

from netcascade.config import settings
from netcascade.models.constants import CSVColumn
from netcascade.models.distribution import LossCurve
from netcascade.models.network import EnsembleResult
from netcascade.models.trajectory import BifurcationGeometry, CascadeTrajectory, FixedPointSet

Cell = float | int | str | None


def format_number(value: Cell) -> str:
    """Render a cell; floats get settings.csv_significant_digits significant digits."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.{settings.csv_significant_digits}g}"
    return str(value)


def to_csv(columns: Mapping[str, Sequence[Cell]], comments: Sequence[str] = ()) -> str:
    """Write columns as CSV through polars, preceded by '# ' comment lines.

    Cells are pre-formatted as strings so every number keeps the configured
    significant digits regardless of polars' float formatting; None becomes
    an empty field.
    """
    frame = pl.DataFrame(
        {
            str(name): [None if cell is None else format_number(cell) for cell in cells]
            for name, cells in columns.items()
        },
        schema={str(name): pl.String for name in columns},
    )
    header = "".join(f"# {comment}\n" for comment in comments)
    return header + frame.write_csv()


def format_summary(values: Mapping[str, Cell]) -> str:
    """One-line 'key=value' summary for standard error."""
    return " ".join(f"{key}={format_number(value)}" for key, value in values.items())


def orbit_csv(trajectory: CascadeTrajectory) -> str:
    """Orbit as k,delta_k,q_k rows."""
    steps = trajectory.steps
    return to_csv(
        {
            CSVColumn.K: [step.k for step in steps],
            CSVColumn.DELTA_K: [step.delta_k for step in steps],
            CSVColumn.Q_K: [step.q_k for step in steps],
        },
    )


def fixed_points_csv(points: FixedPointSet) -> str:
    """Fixed points as point,stability,basin_lo,basin_hi rows; basins only for stable points."""
    basins = {basin.point: basin for basin in points.basins()}
    rows_lo: list[Cell] = []
    rows_hi: list[Cell] = []
    for point in points.points:
        basin = basins.get(point)
        rows_lo.append(basin.lo if basin else None)
        rows_hi.append(basin.hi if basin else None)
    return to_csv(
        {
            CSVColumn.POINT: list(points.points),
            CSVColumn.STABILITY: [label.value for label in points.stability],
            CSVColumn.BASIN_LO: rows_lo,
            CSVColumn.BASIN_HI: rows_hi,
        },
    )


def bifurcation_csv(geometries: Sequence[BifurcationGeometry]) -> str:
    """Fold geometry as kappa,regime,x0,x1,y0,y1,x2 rows; empty fold cells in the single regime."""
    return to_csv(
        {
            CSVColumn.KAPPA: [geometry.kappa for geometry in geometries],
            CSVColumn.REGIME: [geometry.regime.value for geometry in geometries],
            CSVColumn.X0: [geometry.x_0 for geometry in geometries],
            CSVColumn.X1: [geometry.x_1 for geometry in geometries],
            CSVColumn.Y0: [geometry.y_0 for geometry in geometries],
            CSVColumn.Y1: [geometry.y_1 for geometry in geometries],
            CSVColumn.X2: [geometry.x_2 for geometry in geometries],
        },
    )


def distribution_csv(curve: LossCurve) -> str:
    """Loss curve as x,cdf,pdf rows with gap and jump annotations as comments."""
    comments: list[str] = []
    if curve.gap is not None and curve.jump is not None:
        comments.append(
            f"gap_lo={format_number(curve.gap.lo)}, gap_hi={format_number(curve.gap.hi)}, "
            f"jump_at={format_number(curve.jump.at)}",
        )
        comments.append(
            f"jump_pdf_left={format_number(curve.jump.left_pdf)}, "
            f"jump_pdf_right={format_number(curve.jump.right_pdf)}",
        )
    return to_csv(
        {
            CSVColumn.X: [point.x for point in curve.points],
            CSVColumn.CDF: [point.cdf for point in curve.points],
            CSVColumn.PDF: [point.pdf for point in curve.points],
        },
        comments,
    )


def simulate_csv(ensemble: EnsembleResult) -> str:
    """Ensemble as trial,z,waves,q_final rows in trial order."""
    return to_csv(
        {
            CSVColumn.TRIAL: [result.trial for result in ensemble.results],
            CSVColumn.Z: [result.z for result in ensemble.results],
            CSVColumn.WAVES: [result.waves for result in ensemble.results],
            CSVColumn.Q_FINAL: [result.q_final for result in ensemble.results],
        },
    )


def key_value_csv(values: Mapping[str, Cell], key_column: str = CSVColumn.KEY) -> str:
    """Scalar results as key,value (or statistic,value) rows."""
    return to_csv({key_column: list(values.keys()), CSVColumn.VALUE: list(values.values())})
