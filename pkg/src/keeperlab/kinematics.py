"""Run model (candidate goalkeeper positions) and dive model (reach geometry).

The run model bounds where the goalkeeper could have moved between two
events: a radius grows linearly with the elapsed time, and eight compass
directions (plus staying put) give nine candidate positions. The dive model
turns the time a keeper has before the ball arrives into a reachable
rectangle on the goal plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateProjectionError
from .geometry import GoalPoint, PitchConfig, PitchPoint, RectYZ

# Candidate directions: k * pi/4 for k = 0..7, pitch-axis aligned
# (0 points into the pitch, 90 runs along the goal line toward +y).
RUN_ANGLES: tuple[float, ...] = tuple(k * math.pi / 4 for k in range(8))

# Labels index the nine candidates: stay first, then the eight angles in
# degrees. Directions 135/180/225 have a negative x component (toward the
# defended goal line).
DIRECTION_LABELS: tuple[str, ...] = (
    "stay", "0", "45", "90", "135", "180", "225", "270", "315",
)


@dataclass(frozen=True, slots=True)
class RunModelParams:
    """Linear run model: radius = min(run_speed * dt, radius_cap).

    The model deliberately ignores current velocity and acceleration; it is
    a coarse upper bound on keeper displacement between consecutive events.
    """

    run_speed: float = 5.0
    radius_cap: float = 10.0

    def __post_init__(self):
        if self.run_speed <= 0 or self.radius_cap <= 0:
            raise ValueError("run_speed and radius_cap must be positive")


@dataclass(frozen=True, slots=True)
class DiveModelParams:
    """Dive-reach constants.

    reaction_time, jump_time and max_dive_time are the published dive-study
    constants; keeper_height + vertical_bonus caps the jump height.
    dive_speed, arm_reach and ball_speed close calibration gaps and are
    configurable. jump_time is carried for fidelity but the rectangle
    surrogate does not use it separately.
    """

    reaction_time: float = 0.2
    jump_time: float = 0.5
    max_dive_time: float = 1.2
    keeper_height: float = 1.90
    vertical_bonus: float = 0.5
    dive_speed: float = 3.0
    arm_reach: float = 1.0
    ball_speed: float = 24.0

    def __post_init__(self):
        fields = (
            self.reaction_time, self.jump_time, self.max_dive_time,
            self.keeper_height, self.vertical_bonus, self.dive_speed,
            self.arm_reach, self.ball_speed,
        )
        if any(v <= 0 for v in fields):
            raise ValueError("all dive model parameters must be positive")
        if self.reaction_time >= self.max_dive_time:
            raise ValueError("reaction_time must be smaller than max_dive_time")

    @property
    def max_jump_height(self) -> float:
        return self.keeper_height + self.vertical_bonus


def run_radius(dt: float, p: RunModelParams) -> float:
    """Distance the keeper could cover in dt seconds, capped at radius_cap."""
    if dt < 0:
        raise ValueError(f"dt must be >= 0, got {dt}")
    return min(p.run_speed * dt, p.radius_cap)


def candidate_positions(
    prev: PitchPoint,
    dt: float,
    p: RunModelParams,
    pitch: PitchConfig | None = None,
) -> list[PitchPoint]:
    """Nine candidate positions: stay at `prev`, then eight compass moves.

    Order is fixed (stay first, angles ascending) so downstream indices are
    stable. When a pitch is given, candidates are clipped to its bounds.
    """
    r = run_radius(dt, p)
    points = [prev]
    for theta in RUN_ANGLES:
        points.append(PitchPoint(prev.x + r * math.cos(theta), prev.y + r * math.sin(theta)))
    if pitch is not None:
        points = [pitch.clip(pt) for pt in points]
    return points


def dive_reach(time_available: float, p: DiveModelParams) -> float:
    """Lateral reach: arm length plus dive displacement after reaction time.

    Displacement accrues at dive_speed between reaction_time and
    max_dive_time; extra time beyond max_dive_time does not help.
    """
    if time_available < 0:
        raise ValueError(f"time_available must be >= 0, got {time_available}")
    dive_time = max(0.0, min(time_available, p.max_dive_time) - p.reaction_time)
    return p.arm_reach + p.dive_speed * dive_time


def shot_flight_time(shooter: PitchPoint, target: GoalPoint, p: DiveModelParams) -> float:
    """Ground-plane flight time from the shooter to the target's footprint."""
    return shooter.distance_to(target.footprint()) / p.ball_speed


def dive_rect(
    gk: PitchPoint,
    shooter: PitchPoint,
    target: GoalPoint,
    p: DiveModelParams,
    *,
    projection: str = "central",
    width_clamp: float = 50.0,
) -> RectYZ:
    """Goalkeeper dive area as a rectangle in the goal plane.

    Height spans [0, keeper_height + vertical_bonus]. The width is centered
    on the projection of the keeper onto the goal plane and extends
    dive_reach(t) to each side, where t is the shot's flight time to the
    goal plane. With the default central projection (rays from the shooter),
    the reach is scaled by shooter_depth / (shooter_depth - keeper_depth);
    the "orthogonal" mode drops the scaling and centers the rectangle on the
    keeper's own y.

    A keeper at or beyond the shooter's depth has no central projection onto
    the goal plane and yields an empty rectangle (he is not between the ball
    and the goal). Positions behind the goal plane are rejected.
    """
    if projection not in ("central", "orthogonal"):
        raise ValueError(f"unknown projection mode {projection!r}")
    if shooter.x <= 0:
        raise DegenerateProjectionError("shooter must be strictly in front of the goal plane")
    if gk.x < 0:
        raise DegenerateProjectionError("goalkeeper is behind the goal plane")
    if gk == shooter:
        raise DegenerateProjectionError("goalkeeper and shooter coincide")

    top = p.max_jump_height
    reach = dive_reach(shot_flight_time(shooter, target, p), p)

    if projection == "orthogonal":
        center = gk.y
        half_width = reach
    else:
        depth_gap = shooter.x - gk.x
        if depth_gap <= 0:
            # Keeper level with or beyond the shooter: projection ray never
            # reaches the goal plane, so the covered strip is empty.
            return RectYZ(gk.y, gk.y, 0.0, top)
        ratio = shooter.x / depth_gap
        center = shooter.y + (gk.y - shooter.y) * ratio
        half_width = reach * ratio

    half_width = min(half_width, width_clamp)
    return RectYZ(center - half_width, center + half_width, 0.0, top)
