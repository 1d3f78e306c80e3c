"""Engine configuration: every tunable behind the numbers, in one place.

A single EngineConfig is loaded at service startup (and echoed by the API)
so any displayed probability can be traced back to its assumptions. All
values have documented defaults; a JSON file can override any subset.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .geometry import GoalConfig, GoalPoint, PitchConfig
from .kinematics import DiveModelParams, RunModelParams
from .probability import (
    BLOCK_FEATURE_NAMES,
    SAVE_FEATURE_NAMES,
    BlockModelParams,
    ProbabilityModel,
)

# Six simulated shot targets: two columns 0.2 m inside each post, at low,
# mid and high heights. Ordered right-post column first, low to high.
DEFAULT_TARGETS: tuple[GoalPoint, ...] = (
    GoalPoint(-3.46, 0.24),
    GoalPoint(-3.46, 1.22),
    GoalPoint(-3.46, 2.20),
    GoalPoint(3.46, 0.24),
    GoalPoint(3.46, 1.22),
    GoalPoint(3.46, 2.20),
)

# Default weights were calibrated once against the seeded synthetic corpus
# (see tests/golden/); they are starting points for analysis, not truths.
DEFAULT_BLOCK_MODEL = ProbabilityModel(
    feature_names=BLOCK_FEATURE_NAMES,
    weights=(4.0, -0.05, 1.0),
    bias=-2.0,
)

DEFAULT_SAVE_MODEL = ProbabilityModel(
    feature_names=SAVE_FEATURE_NAMES,
    weights=(0.05, 0.1, 4.0, 0.03, -0.5, -5.2, 0.25),
    bias=-1.2,
)


@dataclass(frozen=True, slots=True)
class ShotTargetConfig:
    """The simulated shot end locations; exactly six unless overridden."""

    points: tuple[GoalPoint, ...] = DEFAULT_TARGETS

    def __post_init__(self):
        if not self.points:
            raise ValueError("at least one shot target is required")


@dataclass(frozen=True)
class EngineConfig:
    pitch: PitchConfig = field(default_factory=PitchConfig)
    goal: GoalConfig = field(default_factory=GoalConfig)
    run: RunModelParams = field(default_factory=RunModelParams)
    dive: DiveModelParams = field(default_factory=DiveModelParams)
    block_params: BlockModelParams = field(default_factory=BlockModelParams)
    targets: ShotTargetConfig = field(default_factory=ShotTargetConfig)
    block_model: ProbabilityModel = DEFAULT_BLOCK_MODEL
    save_model: ProbabilityModel = DEFAULT_SAVE_MODEL
    # Fraction of the pitch (from the defended goal line) where evaluation applies.
    eligibility_fraction: float = 0.3
    heatmap_rows: int = 12
    heatmap_cols: int = 4
    projection_mode: str = "central"  # or "orthogonal"
    dive_budget: str = "dive_time"  # or "flight_time"
    width_clamp: float = 50.0
    gk_angle_mode: str = "to_target"  # or "to_center"

    def __post_init__(self):
        if not 0 < self.eligibility_fraction <= 1:
            raise ValueError("eligibility_fraction must be in (0, 1]")
        for gp in self.targets.points:
            if not self.goal.contains(gp):
                raise ValueError(f"shot target {gp} lies outside the goal mouth")

    @property
    def max_ball_x(self) -> float:
        return self.eligibility_fraction * self.pitch.length

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        return {
            "pitch": {"length": self.pitch.length, "width": self.pitch.width,
                      "margin": self.pitch.margin},
            "goal": {"width": self.goal.width, "height": self.goal.height},
            "run": {"run_speed": self.run.run_speed, "radius_cap": self.run.radius_cap},
            "dive": {
                "reaction_time": self.dive.reaction_time,
                "jump_time": self.dive.jump_time,
                "max_dive_time": self.dive.max_dive_time,
                "keeper_height": self.dive.keeper_height,
                "vertical_bonus": self.dive.vertical_bonus,
                "dive_speed": self.dive.dive_speed,
                "arm_reach": self.dive.arm_reach,
                "ball_speed": self.dive.ball_speed,
            },
            "block_params": {
                "corridor_half_width": self.block_params.corridor_half_width,
                "defender_speed": self.block_params.defender_speed,
                "margin_cap": self.block_params.margin_cap,
            },
            "targets": [[gp.y, gp.z] for gp in self.targets.points],
            "block_model": _model_to_dict(self.block_model),
            "save_model": _model_to_dict(self.save_model),
            "eligibility_fraction": self.eligibility_fraction,
            "heatmap_rows": self.heatmap_rows,
            "heatmap_cols": self.heatmap_cols,
            "projection_mode": self.projection_mode,
            "dive_budget": self.dive_budget,
            "width_clamp": self.width_clamp,
            "gk_angle_mode": self.gk_angle_mode,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "EngineConfig":
        base = cls()
        pitch = {**base.to_dict()["pitch"], **data.get("pitch", {})}
        goal = {**base.to_dict()["goal"], **data.get("goal", {})}
        run = {**base.to_dict()["run"], **data.get("run", {})}
        dive = {**base.to_dict()["dive"], **data.get("dive", {})}
        block_params = {**base.to_dict()["block_params"], **data.get("block_params", {})}
        targets = data.get("targets")
        return cls(
            pitch=PitchConfig(**pitch),
            goal=GoalConfig(**goal),
            run=RunModelParams(**run),
            dive=DiveModelParams(**dive),
            block_params=BlockModelParams(**block_params),
            targets=(
                ShotTargetConfig(tuple(GoalPoint(y, z) for y, z in targets))
                if targets is not None
                else ShotTargetConfig()
            ),
            block_model=(
                _model_from_dict(data["block_model"], BLOCK_FEATURE_NAMES)
                if "block_model" in data
                else DEFAULT_BLOCK_MODEL
            ),
            save_model=(
                _model_from_dict(data["save_model"], SAVE_FEATURE_NAMES)
                if "save_model" in data
                else DEFAULT_SAVE_MODEL
            ),
            eligibility_fraction=data.get("eligibility_fraction", base.eligibility_fraction),
            heatmap_rows=data.get("heatmap_rows", base.heatmap_rows),
            heatmap_cols=data.get("heatmap_cols", base.heatmap_cols),
            projection_mode=data.get("projection_mode", base.projection_mode),
            dive_budget=data.get("dive_budget", base.dive_budget),
            width_clamp=data.get("width_clamp", base.width_clamp),
            gk_angle_mode=data.get("gk_angle_mode", base.gk_angle_mode),
        )

    @classmethod
    def from_file(cls, path: str | Path) -> "EngineConfig":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2) + "\n", encoding="utf-8")


def _model_to_dict(m: ProbabilityModel) -> dict[str, Any]:
    return {
        "feature_names": list(m.feature_names),
        "weights": list(m.weights),
        "bias": m.bias,
    }


def _model_from_dict(data: dict[str, Any], expected: tuple[str, ...]) -> ProbabilityModel:
    model = ProbabilityModel(
        feature_names=tuple(data["feature_names"]),
        weights=tuple(float(w) for w in data["weights"]),
        bias=float(data["bias"]),
    )
    if model.feature_names != expected:
        raise ValueError(f"model features must be {expected}")
    return model
