"""Tests for fixed points and their stability."""

import numpy as np
import pytest

from netcascade.cascade import bifurcation_geometry, fixed_points, map_F
from netcascade.errors import DomainError
from netcascade.models.constants import Stability
from netcascade.models.params import ScenarioParams


def _geometry_four() -> tuple[float, float, float, float, float]:
    geometry = bifurcation_geometry(4.0)
    assert geometry.x_0 is not None and geometry.x_1 is not None and geometry.x_2 is not None
    assert geometry.y_0 is not None and geometry.y_1 is not None
    return geometry.x_0, geometry.x_1, geometry.y_0, geometry.y_1, geometry.x_2


class TestFixedPoints:
    """Test cases for fixed_points."""

    def test_single_stable_point(self) -> None:
        """Test kappa = 1, delta_1 = 0 has one stable point near 0.783."""
        points = fixed_points(ScenarioParams.from_reduced(0.0, 1.0))
        assert len(points.points) == 1
        assert points.points[0] == pytest.approx(0.783, abs=1e-3)
        assert points.stability == (Stability.STABLE,)

    def test_no_fire_sales(self) -> None:
        """Test kappa = 0 returns delta_1 itself."""
        points = fixed_points(ScenarioParams.from_reduced(-0.4, 0.0))
        assert points.points == (-0.4,)
        assert points.selected == -0.4

    def test_three_points_between_folds(self) -> None:
        """Test z_1 < x_1 < z_2 < x_0 < z_3 with stable/unstable/stable labels."""
        x_0, x_1, y_0, y_1, _ = _geometry_four()
        points = fixed_points(ScenarioParams.from_reduced((y_0 + y_1) / 2.0, 4.0))
        assert len(points.points) == 3
        z_1, z_2, z_3 = points.points
        assert z_1 < x_1 < z_2 < x_0 < z_3
        assert points.stability == (Stability.STABLE, Stability.UNSTABLE, Stability.STABLE)
        assert points.selected == z_1

    def test_single_point_below_lower_fold(self) -> None:
        """Test delta_1 = y_0 - 1 leaves one point, left of x_1."""
        _, x_1, y_0, _, _ = _geometry_four()
        points = fixed_points(ScenarioParams.from_reduced(y_0 - 1.0, 4.0))
        assert len(points.points) == 1
        assert points.points[0] < x_1

    def test_roots_solve_fixed_point_equation(self) -> None:
        """Test each reported point satisfies x = delta_1 + kappa*N(x)."""
        _, _, y_0, y_1, _ = _geometry_four()
        delta_1 = 0.3 * y_0 + 0.7 * y_1
        points = fixed_points(ScenarioParams.from_reduced(delta_1, 4.0), tol=1e-13)
        scenario = ScenarioParams.from_reduced(delta_1, 4.0)
        for point in points.points:
            assert map_F(point, scenario) == pytest.approx(point, abs=1e-11)
            assert delta_1 <= point <= delta_1 + 4.0

    def test_basins_split_at_unstable_point(self) -> None:
        """Test the unstable middle point bounds both basins."""
        _, _, y_0, y_1, _ = _geometry_four()
        points = fixed_points(ScenarioParams.from_reduced((y_0 + y_1) / 2.0, 4.0))
        lower, upper = points.basins()
        assert lower.hi == points.points[1]
        assert upper.lo == points.points[1]

    def test_no_multiplicity_below_critical_strength(self) -> None:
        """Test kappa = 2 never yields more than one point on a 10^4 grid."""
        counts = {
            len(fixed_points(ScenarioParams.from_reduced(float(delta_1), 2.0)).points)
            for delta_1 in np.linspace(-4.0, 2.0, 10_000)
        }
        assert counts == {1}

    def test_invalid_tolerance(self) -> None:
        """Test that tol <= 0 is rejected."""
        with pytest.raises(DomainError):
            fixed_points(ScenarioParams.from_reduced(0.0, 1.0), tol=0.0)
