import math
import random

import pytest

from keeperlab import (
    DegenerateProjectionError,
    DiveModelParams,
    GoalPoint,
    PitchConfig,
    PitchPoint,
    RunModelParams,
    candidate_positions,
    dive_reach,
    dive_rect,
    run_radius,
    shot_flight_time,
)


def assert_point(p, x, y, abs_tol=1e-12):
    assert math.isclose(p.x, x, abs_tol=abs_tol) and math.isclose(p.y, y, abs_tol=abs_tol)


class TestRunRadius:
    def test_zero_time(self):
        assert run_radius(0.0, RunModelParams()) == 0.0

    def test_linear_with_defaults(self):
        assert run_radius(1.0, RunModelParams()) == 5.0

    def test_cap_binds(self):
        assert run_radius(10.0, RunModelParams()) == 10.0

    def test_negative_dt_rejected(self):
        with pytest.raises(ValueError):
            run_radius(-0.1, RunModelParams())

    def test_nondecreasing_and_bounded(self):
        p = RunModelParams()
        rng = random.Random(37)
        dts = sorted(rng.uniform(0, 5) for _ in range(50))
        radii = [run_radius(dt, p) for dt in dts]
        assert all(r0 <= r1 for r0, r1 in zip(radii, radii[1:]))
        assert all(r <= p.radius_cap for r in radii)


class TestCandidatePositions:
    def test_zero_dt_collapses_to_prev(self):
        prev = PitchPoint(4.0, 1.0)
        points = candidate_positions(prev, 0.0, RunModelParams())
        assert len(points) == 9
        assert all(p == prev for p in points)

    def test_axis_angles(self):
        prev = PitchPoint(5.0, 0.0)
        points = candidate_positions(prev, 0.2, RunModelParams())  # r = 1
        assert points[0] == prev
        assert_point(points[1], 6.0, 0.0)
        assert_point(points[3], 5.0, 1.0)
        assert_point(points[5], 4.0, 0.0)
        assert_point(points[7], 5.0, -1.0)

    def test_clipped_to_pitch_bounds(self):
        pitch = PitchConfig()
        rng = random.Random(41)
        for _ in range(200):
            prev = PitchPoint(rng.uniform(0, 20), rng.uniform(-33, 33))
            points = candidate_positions(prev, rng.uniform(0, 4), RunModelParams(), pitch)
            assert len(points) == 9
            for p in points:
                assert 0.0 <= p.x <= pitch.length
                assert abs(p.y) <= pitch.width / 2
                assert pitch.contains(p)


class TestDiveReach:
    def test_reaction_time_leaves_arms_only(self):
        assert dive_reach(0.2, DiveModelParams()) == 1.0

    def test_saturates_at_max_dive_time(self):
        # 1.0 + 3.0 * (1.2 - 0.2) with defaults
        assert dive_reach(1.2, DiveModelParams()) == 4.0
        assert dive_reach(5.0, DiveModelParams()) == 4.0

    def test_zero_time_clamps(self):
        assert dive_reach(0.0, DiveModelParams()) == 1.0

    def test_nondecreasing(self):
        p = DiveModelParams()
        times = [0.0, 0.1, 0.2, 0.5, 0.9, 1.2, 2.0]
        reaches = [dive_reach(t, p) for t in times]
        assert all(r0 <= r1 for r0, r1 in zip(reaches, reaches[1:]))


class TestDiveRect:
    def test_goal_line_keeper_identity_projection(self):
        p = DiveModelParams()
        gk = PitchPoint(0.0, 1.0)
        shooter = PitchPoint(12.0, 0.0)
        target = GoalPoint(0.0, 1.22)
        rect = dive_rect(gk, shooter, target, p)
        reach = dive_reach(shot_flight_time(shooter, target, p), p)
        assert (rect.y0 + rect.y1) / 2 == pytest.approx(1.0, abs=1e-12)
        assert rect.width / 2 == pytest.approx(reach, abs=1e-12)

    def test_midpoint_keeper_doubles_width(self):
        p = DiveModelParams()
        shooter = PitchPoint(12.0, 0.0)
        target = GoalPoint(0.0, 1.22)
        on_line = dive_rect(PitchPoint(0.0, 0.0), shooter, target, p)
        midway = dive_rect(PitchPoint(6.0, 0.0), shooter, target, p)
        assert midway.width == pytest.approx(2.0 * on_line.width, abs=1e-12)

    def test_rect_top_is_height_plus_bonus(self):
        p = DiveModelParams(keeper_height=1.9)
        rect = dive_rect(
            PitchPoint(1.0, 0.0), PitchPoint(10.0, 0.0), GoalPoint(0.0, 1.0), p
        )
        assert rect.z0 == 0.0
        assert rect.z1 == 2.4

    def test_width_shrinks_toward_goal_plane(self):
        p = DiveModelParams()
        shooter = PitchPoint(15.0, 2.0)
        target = GoalPoint(-1.0, 0.5)
        widths = [
            dive_rect(PitchPoint(x, 1.0), shooter, target, p).width
            for x in (10.0, 7.0, 4.0, 1.0, 0.0)
        ]
        assert all(w0 >= w1 - 1e-12 for w0, w1 in zip(widths, widths[1:]))

    def test_degenerate_projections_rejected(self):
        p = DiveModelParams()
        target = GoalPoint(0.0, 1.0)
        with pytest.raises(DegenerateProjectionError):
            dive_rect(PitchPoint(1, 0), PitchPoint(0.0, 3.0), target, p)
        with pytest.raises(DegenerateProjectionError):
            dive_rect(PitchPoint(1, 0), PitchPoint(-4.0, 3.0), target, p)
        with pytest.raises(DegenerateProjectionError):
            dive_rect(PitchPoint(-0.5, 0), PitchPoint(10.0, 3.0), target, p)
        with pytest.raises(DegenerateProjectionError):
            dive_rect(PitchPoint(10.0, 3.0), PitchPoint(10.0, 3.0), target, p)

    def test_keeper_beyond_shooter_covers_nothing(self):
        p = DiveModelParams()
        rect = dive_rect(
            PitchPoint(11.0, 0.0), PitchPoint(10.0, 0.0), GoalPoint(0.0, 1.0), p
        )
        assert rect.width == 0.0

    def test_orthogonal_mode_ignores_depth(self):
        p = DiveModelParams()
        shooter = PitchPoint(12.0, 0.0)
        target = GoalPoint(0.0, 1.22)
        reach = dive_reach(shot_flight_time(shooter, target, p), p)
        rect = dive_rect(PitchPoint(6.0, -2.0), shooter, target, p, projection="orthogonal")
        assert (rect.y0 + rect.y1) / 2 == pytest.approx(-2.0, abs=1e-12)
        assert rect.width / 2 == pytest.approx(reach, abs=1e-12)


class TestParamValidation:
    def test_run_params_must_be_positive(self):
        with pytest.raises(ValueError):
            RunModelParams(run_speed=0.0)
        with pytest.raises(ValueError):
            RunModelParams(radius_cap=-1.0)

    def test_dive_params_reaction_before_max(self):
        with pytest.raises(ValueError):
            DiveModelParams(reaction_time=1.3)
        with pytest.raises(ValueError):
            DiveModelParams(arm_reach=0.0)
