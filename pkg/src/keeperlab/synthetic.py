"""Deterministic synthetic match generator.

Produces schema-valid matches with plausible buildups ending in shots, used
for desk-scale analysis and calibration. The generated keeper behaves like
real keepers are reported to: forward-biased, stepping toward the ball.
Corner cases (keeper on the goal line, empty defense, crowded box, missing
frames, possession breaks, out-of-zone buildup) are woven in on a fixed
schedule so every eligibility branch appears in any reasonably sized corpus.
"""

from __future__ import annotations

import math
import random

from .geometry import PitchConfig, PitchPoint
from .match_data import Event, GameState, Match, MatchMeta

# Actual-keeper move palette: mostly toward the ball (+x) or sideways,
# rarely backward. Angles are the run-model compass (0 = into the pitch).
_KEEPER_MOVE_WEIGHTS = (
    ("stay", 0.12),
    (0, 0.24), (1, 0.17), (7, 0.17),   # forward and forward-diagonals
    (2, 0.11), (6, 0.11),              # sideways
    (3, 0.03), (4, 0.02), (5, 0.03),   # backward
)


def _round_point(x: float, y: float, pitch: PitchConfig) -> PitchPoint:
    p = pitch.clip(PitchPoint(x, y))
    return PitchPoint(round(p.x, 3), round(p.y, 3))


def _keeper_step(rng: random.Random, gk: PitchPoint, ball: PitchPoint, dt: float,
                 pitch: PitchConfig) -> PitchPoint:
    choice = rng.choices(
        [m for m, _ in _KEEPER_MOVE_WEIGHTS],
        weights=[w for _, w in _KEEPER_MOVE_WEIGHTS],
    )[0]
    if choice == "stay":
        return gk
    step = rng.uniform(0.3, min(3.5, 4.0 * dt))
    angle = choice * math.pi / 4
    # Lean the sideways moves toward the ball's side of the goal.
    y_lean = 0.15 * (1 if ball.y > gk.y else -1)
    x = gk.x + step * math.cos(angle)
    y = gk.y + step * (math.sin(angle) + y_lean)
    x = min(max(x, 0.0), 16.0)
    y = min(max(y, -12.0), 12.0)
    return _round_point(x, y, pitch)


def _defenders(rng: random.Random, ball: PitchPoint, count: int,
               pitch: PitchConfig) -> tuple[PitchPoint, ...]:
    out = []
    for _ in range(count):
        x = rng.uniform(1.0, max(2.0, ball.x))
        y = rng.uniform(ball.y - 8.0, ball.y + 8.0)
        out.append(_round_point(x, y, pitch))
    return tuple(out)


def _attackers(rng: random.Random, ball: PitchPoint, count: int,
               pitch: PitchConfig) -> tuple[tuple[PitchPoint, ...], int]:
    players = [
        _round_point(
            ball.x + rng.uniform(-6.0, 10.0),
            ball.y + rng.uniform(-9.0, 9.0),
            pitch,
        )
        for _ in range(count - 1)
    ]
    carrier_index = rng.randrange(count)
    players.insert(carrier_index, ball)
    return tuple(players), carrier_index


def generate_synthetic(seed: int, n_episodes: int) -> Match:
    """Deterministic pseudo-random match with n_episodes shot-ending episodes."""
    if n_episodes < 1:
        raise ValueError("n_episodes must be >= 1")
    rng = random.Random(seed)
    pitch = PitchConfig()
    events: list[Event] = []
    clock = rng.uniform(10.0, 30.0)

    for ep in range(n_episodes):
        n_buildup = rng.randint(4, 6)
        # Ball walks in toward the goal; every third episode starts outside
        # the defended zone so out-of-zone events appear in any corpus.
        ball_x = rng.uniform(33.0, 42.0) if ep % 3 == 0 else rng.uniform(18.0, 30.0)
        ball_y = rng.uniform(-18.0, 18.0)
        gk = _round_point(rng.uniform(2.0, 6.5), rng.uniform(-2.5, 2.5), pitch)
        shot_x = rng.uniform(6.0, 24.0)

        n_events = n_buildup + 1
        for i in range(n_events):
            is_shot = i == n_events - 1
            dt = rng.uniform(1.2, 2.4)
            clock += dt
            if is_shot:
                ball_x, ball_y = shot_x, ball_y + rng.uniform(-3.0, 3.0)
            elif i > 0:
                ball_x += (shot_x - ball_x) * rng.uniform(0.3, 0.6)
                ball_y += rng.uniform(-4.0, 4.0)
            ball = _round_point(ball_x, ball_y, pitch)
            gk = _keeper_step(rng, gk, ball, dt, pitch)
            if is_shot and ep % 9 == 2:
                gk = PitchPoint(0.0, round(gk.y, 3))  # keeper caught on his line

            if ep % 9 == 0:
                n_def = 0
            elif ep % 9 == 1:
                n_def = rng.randint(8, 10)
            else:
                n_def = rng.randint(2, 6)
            defenders = _defenders(rng, ball, n_def, pitch)
            attackers, carrier = _attackers(rng, ball, rng.randint(3, 7), pitch)
            under_pressure = rng.random() < 0.3

            frame: GameState | None = GameState(
                goalkeeper=gk,
                defenders=defenders,
                attackers=attackers,
                ball_carrier=carrier,
                under_pressure=under_pressure,
            )
            event_type = "shot" if is_shot else rng.choice(("pass", "carry", "carry"))
            team = "attacking"
            if not is_shot:
                mid = i == n_events // 2
                if mid and ep % 4 == 3:
                    frame = None  # tracking dropout
                elif mid and ep % 4 == 1:
                    frame = GameState(
                        goalkeeper=None,
                        defenders=defenders,
                        attackers=attackers,
                        ball_carrier=carrier,
                        under_pressure=under_pressure,
                    )
                elif i == 1 and ep % 5 == 2:
                    team = "defending"
                    event_type = "clearance"
            events.append(
                Event(
                    id=f"ev{len(events):05d}",
                    timestamp=round(clock, 2),
                    type=event_type,
                    team=team,
                    ball=ball,
                    under_pressure=under_pressure,
                    freeze_frame=frame,
                )
            )
        clock += rng.uniform(20.0, 40.0)

    return Match(
        meta=MatchMeta(match_id=f"synthetic-{seed}"),
        events=tuple(events),
    )
