"""The three shadow metrics describing a goalkeeper's position.

All three are area ratios in [0, 1]:

* position shadow — how much of the shooter's projection triangle (shooter
  and both posts) is covered by the keeper's projection triangle (keeper and
  both posts);
* goal shadow — how much of the goal mouth is covered by the keeper's dive
  rectangle;
* dive shadow — how much of the shooter's triangle is covered by the disk
  the keeper can sweep around himself, with radius capped by dive reach.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateTriangleError
from .geometry import (
    Circle2,
    GoalConfig,
    GoalPoint,
    PitchPoint,
    Triangle2,
    convex_poly_intersection_area,
    circle_poly_intersection_area,
    foot_of_perpendicular,
    rect_intersection_area,
    triangle_area,
)
from .kinematics import DiveModelParams, dive_reach, dive_rect, shot_flight_time

_CLAMP_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class ShadowSet:
    position_shadow: float
    goal_shadow: float
    dive_shadow: float

    def __post_init__(self):
        for name, v in (
            ("position_shadow", self.position_shadow),
            ("goal_shadow", self.goal_shadow),
            ("dive_shadow", self.dive_shadow),
        ):
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {v}")


def _clamp_ratio(x: float) -> float:
    # Intersection ratios are mathematically <= 1; anything past that is
    # floating error and is clamped (tolerance 1e-9 before snapping).
    if x < 0.0:
        return 0.0 if x > -_CLAMP_TOL else max(x, 0.0)
    if x > 1.0:
        return 1.0
    return x


def _shooter_triangle(shooter: PitchPoint, goal: GoalConfig) -> Triangle2:
    if shooter.x < 0:
        raise ValueError("shooter must not be behind the goal plane")
    tri = Triangle2(shooter, goal.right_post, goal.left_post)
    if triangle_area(tri) == 0.0:
        raise DegenerateTriangleError(
            "shooter is collinear with the posts; projection triangle is empty"
        )
    return tri


def position_shadow(gk: PitchPoint, shooter: PitchPoint, goal: GoalConfig) -> float:
    """Fraction of the shooter's projection triangle covered by the keeper's.

    Both triangles share the goal line as base, so a keeper standing inside
    the shooter triangle covers exactly depth(gk)/depth(shooter). A keeper on
    the goal line casts no shadow (0); a keeper on the shooter covers
    everything (1).
    """
    shooter_tri = _shooter_triangle(shooter, goal)
    if gk == shooter:
        return 1.0
    gk_tri = Triangle2(gk, goal.right_post, goal.left_post)
    gk_area = triangle_area(gk_tri)
    if gk_area == 0.0:
        return 0.0
    overlap = convex_poly_intersection_area(gk_tri.vertices, shooter_tri.vertices)
    return _clamp_ratio(overlap / triangle_area(shooter_tri))


def goal_shadow(
    gk: PitchPoint,
    shooter: PitchPoint,
    dive: DiveModelParams,
    goal: GoalConfig,
    *,
    projection: str = "central",
    width_clamp: float = 50.0,
) -> float:
    """Fraction of the goal mouth covered by the keeper's dive rectangle.

    The shot's flight time (which sets the dive reach) is taken to the goal
    center, making this shadow independent of any particular target.
    """
    rect = dive_rect(
        gk,
        shooter,
        GoalPoint(0.0, goal.height / 2),
        dive,
        projection=projection,
        width_clamp=width_clamp,
    )
    covered = rect_intersection_area(rect, goal.mouth_rect())
    return _clamp_ratio(covered / goal.mouth_area)


def dive_shadow(
    gk: PitchPoint,
    shooter: PitchPoint,
    target: GoalPoint,
    dive: DiveModelParams,
    goal: GoalConfig,
    *,
    budget: str = "dive_time",
) -> float:
    """Fraction of the shooter's triangle covered by the keeper's dive disk.

    The shot line runs along the ground from the shooter to the target's
    footprint. The disk is centered on the keeper with radius equal to his
    distance to that line, capped by the reach of a full-length dive
    (budget="dive_time") or by the reach available within the shot's flight
    time (budget="flight_time"). The disk is not clipped at the goal line;
    any part reaching behind it still counts toward the covered area.
    """
    if budget not in ("dive_time", "flight_time"):
        raise ValueError(f"unknown reach budget {budget!r}")
    shooter_tri = _shooter_triangle(shooter, goal)
    foot = foot_of_perpendicular(gk, (shooter, target.footprint()))
    if budget == "flight_time":
        cap = dive_reach(shot_flight_time(shooter, target, dive), dive)
    else:
        cap = dive_reach(dive.max_dive_time, dive)
    radius = min(gk.distance_to(foot), cap)
    if radius == 0.0:
        return 0.0
    covered = circle_poly_intersection_area(Circle2(gk, radius), shooter_tri.vertices)
    return _clamp_ratio(covered / triangle_area(shooter_tri))


def shadow_set(
    gk: PitchPoint,
    shooter: PitchPoint,
    target: GoalPoint,
    dive: DiveModelParams,
    goal: GoalConfig,
    *,
    projection: str = "central",
    width_clamp: float = 50.0,
    budget: str = "dive_time",
) -> ShadowSet:
    """All three shadows for one keeper/shooter/target configuration."""
    return ShadowSet(
        position_shadow=position_shadow(gk, shooter, goal),
        goal_shadow=goal_shadow(
            gk, shooter, dive, goal, projection=projection, width_clamp=width_clamp
        ),
        dive_shadow=dive_shadow(gk, shooter, target, dive, goal, budget=budget),
    )
