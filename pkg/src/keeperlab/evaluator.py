"""Simulated shots, the minimax position metric, best-move search, analytics.

Every eligible freeze frame is scored by simulating perfectly accurate shots
to the configured targets and taking the worst case:

    metric(position) = max over targets of P(goal | shot to target)

The best move minimizes that metric over the nine run-model candidates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import EngineConfig
from .errors import IneligibleStateError
from .geometry import GoalPoint, PitchConfig, PitchPoint
from .kinematics import DIRECTION_LABELS, RUN_ANGLES, candidate_positions
from .match_data import Episode, GameState, Match, flag_eligibility, segment_episodes
from .probability import block_features, p_block, p_goal, p_save, save_features


@dataclass(frozen=True, slots=True)
class PositionEvaluation:
    position: PitchPoint
    per_target_p_goal: tuple[float, ...]
    metric: float
    worst_index: int

    def worst_target(self, cfg: EngineConfig) -> GoalPoint:
        return cfg.targets.points[self.worst_index]


@dataclass(frozen=True, slots=True)
class MoveDecision:
    candidates: tuple[PositionEvaluation, ...]
    chosen_index: int
    chosen_direction: str
    actual_position: PitchPoint | None = None
    actual_direction: str | None = None

    @property
    def chosen(self) -> PositionEvaluation:
        return self.candidates[self.chosen_index]


@dataclass(frozen=True)
class MoveDistribution:
    counts: dict[str, int]
    frequencies: dict[str, float]
    actual_counts: dict[str, int] | None
    actual_frequencies: dict[str, float] | None


@dataclass(frozen=True)
class DivergenceReport:
    """Model vs actual per-direction frequencies and their total variation."""

    directions: tuple[str, ...]
    model_frequencies: dict[str, float]
    actual_frequencies: dict[str, float]
    tv_distance: float


def is_eligible(state: GameState, cfg: EngineConfig) -> bool:
    shooter = state.shooter
    return shooter is not None and 0.0 < shooter.x <= cfg.max_ball_x


def _require_eligible(state: GameState, cfg: EngineConfig) -> PitchPoint:
    shooter = state.shooter
    if shooter is None:
        raise IneligibleStateError("no opponent ball carrier in the freeze frame")
    if not 0.0 < shooter.x <= cfg.max_ball_x:
        raise IneligibleStateError(
            f"ball at x={shooter.x:.2f} is outside the defended zone"
            f" (0, {cfg.max_ball_x:.2f}]"
        )
    return shooter


def _block_probabilities(state: GameState, cfg: EngineConfig) -> tuple[float, ...]:
    """P(blocked) per target. Keeper-independent, so computed once per state."""
    shooter = _require_eligible(state, cfg)
    return tuple(
        p_block(
            block_features(shooter, target, state, cfg.block_params, cfg.dive),
            cfg.block_model,
        )
        for target in cfg.targets.points
    )


def _p_goal_for_target(
    gk: PitchPoint,
    shooter: PitchPoint,
    target: GoalPoint,
    state: GameState,
    cfg: EngineConfig,
    blocked: float,
) -> float:
    saved = p_save(
        save_features(
            gk, shooter, target, state, cfg.dive, cfg.goal,
            projection=cfg.projection_mode,
            width_clamp=cfg.width_clamp,
            budget=cfg.dive_budget,
            gk_angle_mode=cfg.gk_angle_mode,
        ),
        cfg.save_model,
    )
    return p_goal(blocked, saved)


def evaluate_position(
    gk: PitchPoint,
    state: GameState,
    cfg: EngineConfig,
    _block_probs: tuple[float, ...] | None = None,
) -> PositionEvaluation:
    """Worst-case conceding probability over all simulated shot targets."""
    shooter = _require_eligible(state, cfg)
    blocks = _block_probs if _block_probs is not None else _block_probabilities(state, cfg)
    per_target = tuple(
        _p_goal_for_target(gk, shooter, target, state, cfg, blocked)
        for target, blocked in zip(cfg.targets.points, blocks)
    )
    worst = 0
    for i, v in enumerate(per_target):
        if v > per_target[worst]:
            worst = i
    return PositionEvaluation(
        position=gk,
        per_target_p_goal=per_target,
        metric=per_target[worst],
        worst_index=worst,
    )


def best_move(
    prev_gk: PitchPoint,
    dt: float,
    state: GameState,
    cfg: EngineConfig,
    actual_position: PitchPoint | None = None,
) -> MoveDecision:
    """Evaluate the nine run-model candidates and pick the safest.

    Ties break toward the smaller displacement from the previous position,
    then toward the lower candidate index, so results are reproducible.
    """
    blocks = _block_probabilities(state, cfg)
    candidates = candidate_positions(prev_gk, dt, cfg.run, cfg.pitch)
    evals = tuple(
        evaluate_position(c, state, cfg, _block_probs=blocks) for c in candidates
    )
    best = 0
    best_key = (evals[0].metric, prev_gk.distance_to(candidates[0]), 0)
    for i in range(1, len(evals)):
        key = (evals[i].metric, prev_gk.distance_to(candidates[i]), i)
        if key < best_key:
            best, best_key = i, key
    actual_direction = (
        classify_direction(prev_gk, actual_position) if actual_position is not None else None
    )
    return MoveDecision(
        candidates=evals,
        chosen_index=best,
        chosen_direction=DIRECTION_LABELS[best],
        actual_position=actual_position,
        actual_direction=actual_direction,
    )


def classify_direction(
    prev: PitchPoint, moved_to: PitchPoint, *, min_displacement: float = 0.25
) -> str:
    """Quantize an observed keeper displacement to the nine move directions."""
    dx, dy = moved_to.x - prev.x, moved_to.y - prev.y
    if math.hypot(dx, dy) < min_displacement:
        return DIRECTION_LABELS[0]
    angle = math.atan2(dy, dx) % (2 * math.pi)
    k = round(angle / (math.pi / 4)) % 8
    return DIRECTION_LABELS[1 + k]


def toward_goal_line(direction: str) -> bool:
    """True for directions with a negative x component (135, 180, 225)."""
    if direction == "stay":
        return False
    return math.cos(RUN_ANGLES[DIRECTION_LABELS.index(direction) - 1]) < -1e-9


def move_distribution(decisions: list[MoveDecision]) -> MoveDistribution:
    """Direction histogram of model choices (and actual moves when present)."""
    if not decisions:
        raise ValueError("no decisions to aggregate")
    counts = {label: 0 for label in DIRECTION_LABELS}
    for d in decisions:
        counts[d.chosen_direction] += 1
    n = len(decisions)
    frequencies = {label: c / n for label, c in counts.items()}
    with_actual = [d for d in decisions if d.actual_direction is not None]
    if with_actual:
        actual_counts = {label: 0 for label in DIRECTION_LABELS}
        for d in with_actual:
            actual_counts[d.actual_direction] += 1
        m = len(with_actual)
        actual_frequencies = {label: c / m for label, c in actual_counts.items()}
    else:
        actual_counts = None
        actual_frequencies = None
    return MoveDistribution(counts, frequencies, actual_counts, actual_frequencies)


def compare_model_vs_actual(decisions: list[MoveDecision]) -> DivergenceReport:
    """Per-direction frequency pairs plus total-variation distance."""
    if not decisions:
        raise ValueError("no decisions to compare")
    missing = [d for d in decisions if d.actual_direction is None]
    if missing:
        raise ValueError(f"{len(missing)} decisions lack an actual direction")
    dist = move_distribution(decisions)
    assert dist.actual_frequencies is not None
    tv = 0.5 * sum(
        abs(dist.frequencies[label] - dist.actual_frequencies[label])
        for label in DIRECTION_LABELS
    )
    return DivergenceReport(
        directions=DIRECTION_LABELS,
        model_frequencies=dist.frequencies,
        actual_frequencies=dist.actual_frequencies,
        tv_distance=tv,
    )


def least_protected_target(gk: PitchPoint, state: GameState, cfg: EngineConfig) -> GoalPoint:
    """The simulated target with the highest conceding probability."""
    return evaluate_position(gk, state, cfg).worst_target(cfg)


def goal_heatmap(
    gk: PitchPoint,
    state: GameState,
    cfg: EngineConfig,
    rows: int | None = None,
    cols: int | None = None,
) -> list[list[float]]:
    """Conceding probability for a simulated shot to each goal-mouth cell.

    rows split the mouth along y (ascending from the right post at -y to the
    left post at +y); cols split the height along z (ascending from the
    ground). Entry [r][c] is P(goal) for a shot to the center of cell (r, c).
    """
    rows = cfg.heatmap_rows if rows is None else rows
    cols = cfg.heatmap_cols if cols is None else cols
    if rows < 1 or cols < 1:
        raise ValueError(f"grid must be at least 1x1, got {rows}x{cols}")
    shooter = _require_eligible(state, cfg)
    hw = cfg.goal.half_width
    dy = cfg.goal.width / rows
    dz = cfg.goal.height / cols
    grid: list[list[float]] = []
    for r in range(rows):
        y = -hw + (r + 0.5) * dy
        row: list[float] = []
        for c in range(cols):
            target = GoalPoint(y, (c + 0.5) * dz)
            blocked = p_block(
                block_features(shooter, target, state, cfg.block_params, cfg.dive),
                cfg.block_model,
            )
            row.append(_p_goal_for_target(gk, shooter, target, state, cfg, blocked))
        grid.append(row)
    return grid


# ---------------------------------------------------------------------------
# Match-level analysis
# ---------------------------------------------------------------------------


def episode_decisions(
    episode: Episode, cfg: EngineConfig, pitch: PitchConfig | None = None
) -> list[MoveDecision]:
    """Best-move decisions for every green event with a usable previous frame.

    The run model needs the keeper's position at the previous event, so the
    first event of an episode never yields a decision.
    """
    flags = flag_eligibility(episode, pitch or cfg.pitch, cfg.eligibility_fraction)
    decisions: list[MoveDecision] = []
    for i in range(1, len(episode.events)):
        if not flags[i].green:
            continue
        prev = episode.events[i - 1]
        if prev.freeze_frame is None or prev.freeze_frame.goalkeeper is None:
            continue
        ev = episode.events[i]
        state = ev.freeze_frame
        assert state is not None  # green implies a frame
        dt = ev.timestamp - prev.timestamp
        decisions.append(
            best_move(
                prev.freeze_frame.goalkeeper,
                dt,
                state,
                cfg,
                actual_position=state.goalkeeper,
            )
        )
    return decisions


def analyze_match(match: Match, cfg: EngineConfig) -> list[MoveDecision]:
    """All eligible decisions across all episodes of a match."""
    decisions: list[MoveDecision] = []
    for episode in segment_episodes(match):
        decisions.extend(episode_decisions(episode, cfg, match.meta.pitch()))
    return decisions
