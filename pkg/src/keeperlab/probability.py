"""Block and save probability models, composed into P(goal).

A shot scores only if no field player blocks it and the keeper does not save
it: P(goal) = (1 - P(blocked)) * (1 - P(saved | not blocked)). Both component
models are transparent linear-logistic classifiers over documented features;
weights are trainable (fit_logistic) or importable from a text weights file.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import (
    DegenerateProjectionError,
    FeatureMismatchError,
    SingleClassError,
    WeightsFileError,
)
from .geometry import GoalConfig, GoalPoint, PitchPoint
from .kinematics import DiveModelParams
from .match_data import GameState
from .shadows import ShadowSet, shadow_set

BLOCK_FEATURE_NAMES = ("corridor_density", "min_time_margin", "defenders_in_corridor")
SAVE_FEATURE_NAMES = (
    "position_shadow",
    "goal_shadow",
    "dive_shadow",
    "shot_distance",
    "shot_angle",
    "gk_shooter_angle",
    "under_pressure",
)

# Keeps logistic outputs strictly inside (0, 1) in float64.
_LOGIT_LIMIT = 36.0


@dataclass(frozen=True, slots=True)
class BlockModelParams:
    """Geometry knobs for block-feature extraction."""

    corridor_half_width: float = 0.5
    defender_speed: float = 6.0
    margin_cap: float = 99.0

    def __post_init__(self):
        if self.corridor_half_width <= 0 or self.defender_speed <= 0 or self.margin_cap <= 0:
            raise ValueError("block model parameters must be positive")


@dataclass(frozen=True, slots=True)
class BlockFeatures:
    """Inputs to the block model.

    min_time_margin is (defender time to the nearest shot-trajectory point)
    minus (ball time to that point), minimized over defenders; negative means
    some defender beats the ball there. With no defenders it takes the
    margin-cap sentinel so the feature stays finite.
    """

    corridor_density: float
    min_time_margin: float
    defenders_in_corridor: int

    def as_vector(self) -> tuple[float, ...]:
        return (self.corridor_density, self.min_time_margin, float(self.defenders_in_corridor))


@dataclass(frozen=True, slots=True)
class SaveFeatures:
    shadows: ShadowSet
    shot_distance: float
    shot_angle: float
    gk_shooter_angle: float
    under_pressure: bool

    def as_vector(self) -> tuple[float, ...]:
        return (
            self.shadows.position_shadow,
            self.shadows.goal_shadow,
            self.shadows.dive_shadow,
            self.shot_distance,
            self.shot_angle,
            self.gk_shooter_angle,
            1.0 if self.under_pressure else 0.0,
        )


def logistic(z: float) -> float:
    z = min(max(z, -_LOGIT_LIMIT), _LOGIT_LIMIT)
    if z >= 0:
        return 1.0 / (1.0 + math.exp(-z))
    e = math.exp(z)
    return e / (1.0 + e)


@dataclass(frozen=True, slots=True)
class ProbabilityModel:
    """Linear-logistic model over a named, ordered feature schema."""

    feature_names: tuple[str, ...]
    weights: tuple[float, ...]
    bias: float

    def __post_init__(self):
        if len(self.feature_names) != len(self.weights):
            raise ValueError(
                f"{len(self.feature_names)} feature names but {len(self.weights)} weights"
            )

    def logit(self, values: Sequence[float]) -> float:
        if len(values) != len(self.weights):
            raise FeatureMismatchError(
                f"expected {len(self.weights)} features, got {len(values)}"
            )
        return self.bias + sum(w * v for w, v in zip(self.weights, values))

    def predict(self, values: Sequence[float]) -> float:
        return logistic(self.logit(values))


def _check_schema(m: ProbabilityModel, expected: tuple[str, ...]) -> None:
    if m.feature_names != expected:
        raise FeatureMismatchError(
            f"model features {m.feature_names} do not match expected {expected}"
        )


# ---------------------------------------------------------------------------
# Feature extraction
# ---------------------------------------------------------------------------


def block_features(
    shooter: PitchPoint,
    target: GoalPoint,
    state: GameState,
    params: BlockModelParams | None = None,
    dive: DiveModelParams | None = None,
) -> BlockFeatures:
    """Defender geometry along the straight shot line shooter -> target.

    The corridor is the shot segment dilated by corridor_half_width on each
    side; density is corridor members per meter of shot length. Time margins
    compare each defender's run to the nearest trajectory point against the
    ball's arrival there.
    """
    params = params or BlockModelParams()
    dive = dive or DiveModelParams()
    if shooter.x <= 0:
        raise DegenerateProjectionError("shooter must be strictly in front of the goal plane")
    end = target.footprint()
    dx, dy = end.x - shooter.x, end.y - shooter.y
    length = math.hypot(dx, dy)
    in_corridor = 0
    min_margin = params.margin_cap
    for d in state.defenders:
        t = ((d.x - shooter.x) * dx + (d.y - shooter.y) * dy) / (length * length)
        t_clamped = min(max(t, 0.0), 1.0)
        nearest = PitchPoint(shooter.x + t_clamped * dx, shooter.y + t_clamped * dy)
        perp = d.distance_to(nearest)
        if 0.0 <= t <= 1.0 and perp <= params.corridor_half_width:
            in_corridor += 1
        ball_time = (t_clamped * length) / dive.ball_speed
        defender_time = perp / params.defender_speed
        min_margin = min(min_margin, defender_time - ball_time)
    return BlockFeatures(
        corridor_density=in_corridor / length,
        min_time_margin=min(min_margin, params.margin_cap),
        defenders_in_corridor=in_corridor,
    )


def _angle_between(ax: float, ay: float, bx: float, by: float) -> float:
    """Unsigned angle between two direction vectors, in [0, pi]."""
    cross = ax * by - ay * bx
    dot = ax * bx + ay * by
    return abs(math.atan2(cross, dot))


def save_features(
    gk: PitchPoint,
    shooter: PitchPoint,
    target: GoalPoint,
    state: GameState,
    dive: DiveModelParams | None = None,
    goal: GoalConfig | None = None,
    *,
    projection: str = "central",
    width_clamp: float = 50.0,
    budget: str = "dive_time",
    gk_angle_mode: str = "to_target",
) -> SaveFeatures:
    """Shadows plus shot distance, shot angle and keeper-alignment angle.

    shot_angle is the angle the posts subtend at the shooter. The keeper
    angle is ambiguous in prose, so two readings ship: "to_target" (angle at
    the shooter between the keeper and the shot line; default, and the one
    that makes targets behind the keeper easier to save) and "to_center"
    (angle at the shooter between the keeper and the goal center,
    independent of the target).
    """
    dive = dive or DiveModelParams()
    goal = goal or GoalConfig()
    shadows = shadow_set(
        gk, shooter, target, dive, goal,
        projection=projection, width_clamp=width_clamp, budget=budget,
    )
    shot_distance = shooter.distance_to(target.footprint())
    shot_angle = _angle_between(
        goal.right_post.x - shooter.x, goal.right_post.y - shooter.y,
        goal.left_post.x - shooter.x, goal.left_post.y - shooter.y,
    )
    if gk_angle_mode == "to_target":
        ref = target.footprint()
        ref_x, ref_y = ref.x - shooter.x, ref.y - shooter.y
    elif gk_angle_mode == "to_center":
        ref_x, ref_y = -shooter.x, -shooter.y
    else:
        raise ValueError(f"unknown gk_angle_mode {gk_angle_mode!r}")
    if gk == shooter:
        gk_angle = 0.0
    else:
        gk_angle = _angle_between(gk.x - shooter.x, gk.y - shooter.y, ref_x, ref_y)
    return SaveFeatures(
        shadows=shadows,
        shot_distance=shot_distance,
        shot_angle=shot_angle,
        gk_shooter_angle=gk_angle,
        under_pressure=state.under_pressure,
    )


# ---------------------------------------------------------------------------
# Prediction and composition
# ---------------------------------------------------------------------------


def p_block(f: BlockFeatures, m: ProbabilityModel) -> float:
    _check_schema(m, BLOCK_FEATURE_NAMES)
    return m.predict(f.as_vector())


def p_save(f: SaveFeatures, m: ProbabilityModel) -> float:
    _check_schema(m, SAVE_FEATURE_NAMES)
    return m.predict(f.as_vector())


def p_goal(p_blocked: float, p_saved_given_not_blocked: float) -> float:
    """P(goal) = P(not blocked) * P(not saved | not blocked)."""
    for name, v in (("p_blocked", p_blocked), ("p_saved_given_not_blocked", p_saved_given_not_blocked)):
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"{name} must be in [0, 1], got {v}")
    return (1.0 - p_blocked) * (1.0 - p_saved_given_not_blocked)


# ---------------------------------------------------------------------------
# Training
# ---------------------------------------------------------------------------


def nll_and_gradient(
    rows: Sequence[Sequence[float]],
    labels: Sequence[int],
    weights: Sequence[float],
    bias: float,
) -> tuple[float, np.ndarray, float]:
    """Mean negative log-likelihood and its gradient w.r.t. (weights, bias)."""
    X = np.asarray(rows, dtype=float)
    y = np.asarray(labels, dtype=float)
    w = np.asarray(weights, dtype=float)
    z = np.clip(X @ w + bias, -_LOGIT_LIMIT, _LOGIT_LIMIT)
    p = 1.0 / (1.0 + np.exp(-z))
    nll = float(-np.mean(y * np.log(p) + (1.0 - y) * np.log(1.0 - p)))
    resid = p - y
    grad_w = X.T @ resid / len(y)
    grad_b = float(np.mean(resid))
    return nll, grad_w, grad_b


@dataclass(frozen=True)
class FitResult:
    model: ProbabilityModel
    # (iteration, mean NLL) pairs recorded during the fit
    loss_history: tuple[tuple[int, float], ...]


def fit_logistic(
    rows: Sequence[Sequence[float]],
    labels: Sequence[int],
    feature_names: Sequence[str],
    *,
    max_iter: int = 500,
    learning_rate: float = 1.0,
    checkpoint_every: int = 25,
) -> FitResult:
    """Maximum-likelihood logistic fit by full-batch gradient descent.

    Features are standardized internally for conditioning and the learned
    weights are mapped back to raw-feature space, so the returned model
    applies directly to unscaled rows. A halving line search keeps the
    recorded loss nonincreasing. Deterministic: zero initialization, fixed
    iteration budget, no randomness.
    """
    X_raw = np.asarray(rows, dtype=float)
    y = np.asarray(labels, dtype=float)
    if X_raw.ndim != 2 or X_raw.shape[0] != y.shape[0]:
        raise ValueError("rows and labels must have matching first dimension")
    if not np.isfinite(X_raw).all():
        raise ValueError("features must be finite")
    if len(feature_names) != X_raw.shape[1]:
        raise FeatureMismatchError(
            f"{len(feature_names)} names for {X_raw.shape[1]} feature columns"
        )
    classes = np.unique(y)
    if not np.isin(classes, (0.0, 1.0)).all():
        raise ValueError("labels must be 0 or 1")
    if classes.size < 2:
        raise SingleClassError("training data contains a single label class")

    mean = X_raw.mean(axis=0)
    std = X_raw.std(axis=0)
    std[std == 0.0] = 1.0
    X = (X_raw - mean) / std

    def loss_at(w: np.ndarray, b: float) -> float:
        z = np.clip(X @ w + b, -_LOGIT_LIMIT, _LOGIT_LIMIT)
        p = 1.0 / (1.0 + np.exp(-z))
        return float(-np.mean(y * np.log(p) + (1.0 - y) * np.log(1.0 - p)))

    w = np.zeros(X.shape[1])
    b = 0.0
    loss = loss_at(w, b)
    history: list[tuple[int, float]] = [(0, loss)]
    for it in range(1, max_iter + 1):
        z = np.clip(X @ w + b, -_LOGIT_LIMIT, _LOGIT_LIMIT)
        p = 1.0 / (1.0 + np.exp(-z))
        resid = p - y
        grad_w = X.T @ resid / len(y)
        grad_b = float(np.mean(resid))
        step = learning_rate
        for _ in range(30):
            w_new = w - step * grad_w
            b_new = b - step * grad_b
            new_loss = loss_at(w_new, b_new)
            if new_loss <= loss:
                break
            step /= 2.0
        else:
            history.append((it, loss))
            break
        w, b, loss = w_new, b_new, new_loss
        if it % checkpoint_every == 0 or it == max_iter:
            history.append((it, loss))

    raw_w = w / std
    raw_b = float(b - np.sum(w * mean / std))
    model = ProbabilityModel(
        feature_names=tuple(feature_names),
        weights=tuple(float(v) for v in raw_w),
        bias=raw_b,
    )
    return FitResult(model=model, loss_history=tuple(history))


# ---------------------------------------------------------------------------
# Weights file I/O
# ---------------------------------------------------------------------------

_BIAS_KEY = "__bias__"


def export_model(m: ProbabilityModel, path: str | Path) -> None:
    """Write a model as tab-separated `feature<TAB>weight` lines, bias last."""
    lines = [f"{name}\t{w!r}" for name, w in zip(m.feature_names, m.weights)]
    lines.append(f"{_BIAS_KEY}\t{m.bias!r}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def import_model(path: str | Path, expected_features: Sequence[str]) -> ProbabilityModel:
    """Load a weights file and validate it against the expected schema."""
    text = Path(path).read_text(encoding="utf-8")
    names: list[str] = []
    weights: list[float] = []
    bias: float | None = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise WeightsFileError(f"line {lineno}: expected `name<TAB>value`, got {line!r}")
        name, raw = parts
        try:
            value = float(raw)
        except ValueError as exc:
            raise WeightsFileError(f"line {lineno}: bad number {raw!r}") from exc
        if not math.isfinite(value):
            raise WeightsFileError(f"line {lineno}: non-finite weight")
        if name == _BIAS_KEY:
            if bias is not None:
                raise WeightsFileError(f"line {lineno}: duplicate bias line")
            bias = value
        else:
            names.append(name)
            weights.append(value)
    if bias is None:
        raise WeightsFileError(f"missing final {_BIAS_KEY} line")
    if tuple(names) != tuple(expected_features):
        raise FeatureMismatchError(
            f"weights file features {tuple(names)} do not match expected {tuple(expected_features)}"
        )
    return ProbabilityModel(feature_names=tuple(names), weights=tuple(weights), bias=bias)
