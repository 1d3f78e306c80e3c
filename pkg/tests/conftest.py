import random

import numpy as np
import pytest

from keeperlab import EngineConfig, GameState, PitchPoint


@pytest.fixture
def cfg() -> EngineConfig:
    return EngineConfig()


def random_eligible_state(rng: random.Random, cfg: EngineConfig,
                          n_defenders: int | None = None) -> GameState:
    """A random freeze frame that passes the evaluator's eligibility checks."""
    shooter = PitchPoint(rng.uniform(4.0, cfg.max_ball_x), rng.uniform(-16.0, 16.0))
    n_def = rng.randint(0, 6) if n_defenders is None else n_defenders
    defenders = tuple(
        PitchPoint(rng.uniform(0.5, shooter.x + 4.0), rng.uniform(-18.0, 18.0))
        for _ in range(n_def)
    )
    extras = tuple(
        PitchPoint(rng.uniform(2.0, 30.0), rng.uniform(-20.0, 20.0))
        for _ in range(rng.randint(0, 4))
    )
    attackers = (shooter,) + extras
    return GameState(
        goalkeeper=PitchPoint(rng.uniform(0.0, 6.0), rng.uniform(-3.5, 3.5)),
        defenders=defenders,
        attackers=attackers,
        ball_carrier=0,
        under_pressure=rng.random() < 0.5,
    )


def mirror_point(p: PitchPoint) -> PitchPoint:
    return PitchPoint(p.x, -p.y)


def mirror_state(state: GameState) -> GameState:
    return GameState(
        goalkeeper=None if state.goalkeeper is None else mirror_point(state.goalkeeper),
        defenders=tuple(mirror_point(p) for p in state.defenders),
        attackers=tuple(mirror_point(p) for p in state.attackers),
        ball_carrier=state.ball_carrier,
        under_pressure=state.under_pressure,
    )


@pytest.fixture
def np_rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
