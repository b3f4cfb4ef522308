"""Tests for orbit, fixed-point and geometry models."""

import math

import pytest
from pydantic import ValidationError

from netcascade.models.constants import KAPPA_0, Regime, Stability
from netcascade.models.trajectory import BifurcationGeometry, CascadeTrajectory, FixedPointSet


class TestCascadeTrajectory:
    """Test cases for CascadeTrajectory."""

    def test_steps_carry_loss_fractions(self) -> None:
        """Test that steps pair each threshold with q_k = N(delta_k)."""
        trajectory = CascadeTrajectory(deltas=(0.0, 0.5, 0.5), converged=True, delta_inf=0.5, iterations_used=2)
        steps = trajectory.steps
        assert [step.k for step in steps] == [1, 2, 3]
        assert steps[0].q_k == 0.5
        assert trajectory.last == 0.5

    def test_decreasing_orbit_rejected(self) -> None:
        """Test that an orbit must be nondecreasing."""
        with pytest.raises(ValidationError, match="nondecreasing"):
            CascadeTrajectory(deltas=(0.0, -0.1), converged=False, iterations_used=1)

    def test_limit_requires_convergence(self) -> None:
        """Test that delta_inf is set exactly when converged."""
        with pytest.raises(ValidationError, match="delta_inf"):
            CascadeTrajectory(deltas=(0.0, 0.1), converged=False, delta_inf=0.1, iterations_used=1)
        with pytest.raises(ValidationError, match="delta_inf"):
            CascadeTrajectory(deltas=(0.0, 0.1), converged=True, iterations_used=1)


class TestFixedPointSet:
    """Test cases for FixedPointSet."""

    def test_three_points_with_basins(self) -> None:
        """Test that the unstable middle point splits the two basins."""
        points = FixedPointSet(
            points=(-1.5, 0.2, 2.5),
            stability=(Stability.STABLE, Stability.UNSTABLE, Stability.STABLE),
            selected=-1.5,
        )
        basins = points.basins()
        assert [(basin.point, basin.lo, basin.hi) for basin in basins] == [
            (-1.5, -math.inf, 0.2),
            (2.5, 0.2, math.inf),
        ]

    def test_single_point_basin_is_whole_line(self) -> None:
        """Test a lone stable point attracts everything."""
        points = FixedPointSet(points=(0.78,), stability=(Stability.STABLE,), selected=0.78)
        assert points.basins()[0].lo == -math.inf
        assert points.basins()[0].hi == math.inf

    def test_unsorted_rejected(self) -> None:
        """Test that points must be sorted."""
        with pytest.raises(ValidationError, match="sorted"):
            FixedPointSet(
                points=(1.0, 0.0),
                stability=(Stability.STABLE, Stability.NEUTRAL),
                selected=0.0,
            )

    def test_alternation_required(self) -> None:
        """Test that three points must be stable/unstable/stable."""
        with pytest.raises(ValidationError, match="alternate"):
            FixedPointSet(
                points=(0.0, 1.0, 2.0),
                stability=(Stability.STABLE, Stability.STABLE, Stability.STABLE),
                selected=0.0,
            )

    def test_selected_must_be_a_point(self) -> None:
        """Test that the selected limit is one of the points."""
        with pytest.raises(ValidationError, match="selected"):
            FixedPointSet(points=(0.0,), stability=(Stability.STABLE,), selected=1.0)


class TestBifurcationGeometry:
    """Test cases for BifurcationGeometry."""

    def test_single_regime_has_no_geometry(self) -> None:
        """Test the single regime carries only kappa."""
        geometry = BifurcationGeometry(kappa=1.0, regime=Regime.SINGLE)
        assert not geometry.is_multi
        assert geometry.kappa_0 == KAPPA_0
        with pytest.raises(ValidationError, match="no fold geometry"):
            BifurcationGeometry(kappa=1.0, regime=Regime.SINGLE, x_0=0.5)

    def test_multi_regime_ordering(self) -> None:
        """Test that the multi regime needs x_1 < 0 < x_0 < x_2 and y_0 < y_1."""
        with pytest.raises(ValidationError, match="x_1 < 0 < x_0 < x_2"):
            BifurcationGeometry(kappa=4.0, regime=Regime.MULTI, x_0=1.0, x_1=-1.0, y_0=-1.0, y_1=-2.0, x_2=0.5)
        with pytest.raises(ValidationError, match="requires"):
            BifurcationGeometry(kappa=4.0, regime=Regime.MULTI, x_0=1.0)
