"""HTTP API exposing evaluation, analytics, and the what-if simulator.

JSON over HTTP/1.1 under /api/v1. Match data is loaded once at startup and
immutable afterwards; every endpoint is a pure function of (loaded data,
request), so identical requests return identical bodies. /simulate never
mutates server state.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .config import EngineConfig, ShotTargetConfig
from .errors import IneligibleStateError, KeeperLabError
from .evaluator import (
    MoveDecision,
    best_move,
    evaluate_position,
    goal_heatmap,
)
from .geometry import GoalPoint, PitchPoint
from .match_data import (
    EligibilityFlag,
    Episode,
    GameState,
    Match,
    event_to_dict,
    flag_eligibility,
    parse_match,
    segment_episodes,
)


@dataclass(frozen=True)
class LoadedMatch:
    match: Match
    episodes: tuple[Episode, ...]
    flags: dict[str, tuple[EligibilityFlag, ...]]  # episode id -> flags


@dataclass(frozen=True)
class MatchStore:
    matches: dict[str, LoadedMatch]
    episode_index: dict[str, str]  # episode id -> match id

    @classmethod
    def build(cls, matches: list[Match], cfg: EngineConfig) -> "MatchStore":
        loaded: dict[str, LoadedMatch] = {}
        index: dict[str, str] = {}
        for match in matches:
            mid = match.meta.match_id
            if mid in loaded:
                raise ValueError(f"duplicate match id {mid!r}")
            episodes = tuple(segment_episodes(match))
            flags = {
                ep.id: tuple(
                    flag_eligibility(ep, match.meta.pitch(), cfg.eligibility_fraction)
                )
                for ep in episodes
            }
            loaded[mid] = LoadedMatch(match=match, episodes=episodes, flags=flags)
            for ep in episodes:
                index[ep.id] = mid
        return cls(matches=loaded, episode_index=index)

    @classmethod
    def from_files(cls, paths: list[str | Path], cfg: EngineConfig) -> "MatchStore":
        return cls.build([parse_match(p) for p in paths], cfg)


# ---------------------------------------------------------------------------
# Request bodies
# ---------------------------------------------------------------------------


class GameStateBody(BaseModel):
    goalkeeper: list[float] | None = None
    defenders: list[list[float]] = Field(default_factory=list)
    attackers: list[list[float]]
    ball_carrier: int | None = None
    under_pressure: bool = False


class SimulateRequest(BaseModel):
    state: GameStateBody
    goalkeeper: list[float]
    simulated_goalkeeper: list[float] | None = None
    targets: list[list[float]] | None = None  # [y, z] pairs in the goal plane
    grid_rows: int | None = None
    grid_cols: int | None = None
    run_dt: float = 1.0


def _as_pitch_point(raw: list[float], cfg: EngineConfig, what: str) -> PitchPoint:
    if len(raw) != 2 or not all(isinstance(v, (int, float)) for v in raw):
        raise HTTPException(422, f"{what} must be an [x, y] pair")
    x, y = float(raw[0]), float(raw[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise HTTPException(422, f"{what} must be finite")
    p = PitchPoint(x, y)
    if not cfg.pitch.contains(p):
        raise HTTPException(422, f"{what} ({x}, {y}) is outside the pitch bounds")
    return p


def _build_state(body: GameStateBody, gk: PitchPoint, cfg: EngineConfig) -> GameState:
    defenders = tuple(
        _as_pitch_point(p, cfg, f"defenders[{i}]") for i, p in enumerate(body.defenders)
    )
    attackers = tuple(
        _as_pitch_point(p, cfg, f"attackers[{i}]") for i, p in enumerate(body.attackers)
    )
    try:
        return GameState(
            goalkeeper=gk,
            defenders=defenders,
            attackers=attackers,
            ball_carrier=body.ball_carrier,
            under_pressure=body.under_pressure,
        )
    except ValueError as exc:
        raise HTTPException(422, str(exc)) from exc


def _goal_point(raw: list[float], cfg: EngineConfig, what: str) -> GoalPoint:
    if len(raw) != 2:
        raise HTTPException(422, f"{what} must be a [y, z] pair")
    gp = GoalPoint(float(raw[0]), float(raw[1]))
    if not cfg.goal.contains(gp):
        raise HTTPException(422, f"{what} lies outside the goal mouth")
    return gp


# ---------------------------------------------------------------------------
# Response shaping
# ---------------------------------------------------------------------------


def _goal_point_json(gp: GoalPoint) -> list[float]:
    return [gp.y, gp.z]


def _evaluation_json(gk: PitchPoint, state: GameState, cfg: EngineConfig) -> dict:
    ev = evaluate_position(gk, state, cfg)
    worst = ev.worst_target(cfg)
    return {
        "position": [gk.x, gk.y],
        "per_target_p_goal": list(ev.per_target_p_goal),
        "metric": ev.metric,
        "worst_target": _goal_point_json(worst),
        "least_protected": _goal_point_json(worst),
    }


def _decision_json(decision: MoveDecision) -> dict:
    from .kinematics import DIRECTION_LABELS

    return {
        "candidates": [
            {
                "direction": DIRECTION_LABELS[i],
                "position": [e.position.x, e.position.y],
                "metric": e.metric,
                "per_target_p_goal": list(e.per_target_p_goal),
            }
            for i, e in enumerate(decision.candidates)
        ],
        "chosen_index": decision.chosen_index,
        "chosen_direction": decision.chosen_direction,
    }


def create_app(store: MatchStore, cfg: EngineConfig, ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="keeperlab", version="0.1.0")

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        # Unparseable JSON is a malformed body (400); valid JSON with wrong
        # shape is an unprocessable request (422).
        malformed = any(e.get("type") == "json_invalid" for e in exc.errors())
        return JSONResponse(
            status_code=400 if malformed else 422,
            content={"detail": [str(e.get("msg", "invalid")) for e in exc.errors()]},
        )

    @app.get("/api/v1/config")
    def get_config() -> dict:
        return cfg.to_dict()

    @app.get("/api/v1/matches")
    def list_matches() -> list[dict]:
        return [
            {
                "match_id": mid,
                "n_events": len(lm.match.events),
                "n_episodes": len(lm.episodes),
                "pitch_length": lm.match.meta.pitch_length,
                "pitch_width": lm.match.meta.pitch_width,
                "goal_width": lm.match.meta.goal_width,
                "goal_height": lm.match.meta.goal_height,
            }
            for mid, lm in sorted(store.matches.items())
        ]

    def _episode_summary(lm: LoadedMatch, ep: Episode) -> dict:
        flags = lm.flags[ep.id]
        return {
            "id": ep.id,
            "start": ep.start,
            "end": ep.end,
            "n_events": len(ep.events),
            "n_green": sum(1 for f in flags if f.green),
            "flags": [
                {"event_id": f.event_id, "green": f.green, "reason": f.reason}
                for f in flags
            ],
        }

    @app.get("/api/v1/matches/{match_id}/episodes")
    def list_episodes(match_id: str, limit: int | None = None, offset: int = 0) -> list[dict]:
        lm = store.matches.get(match_id)
        if lm is None:
            raise HTTPException(404, f"unknown match {match_id!r}")
        episodes = lm.episodes[offset : (offset + limit) if limit is not None else None]
        return [_episode_summary(lm, ep) for ep in episodes]

    def _lookup_episode(episode_id: str) -> tuple[LoadedMatch, Episode]:
        mid = store.episode_index.get(episode_id)
        if mid is None:
            raise HTTPException(404, f"unknown episode {episode_id!r}")
        lm = store.matches[mid]
        ep = next(e for e in lm.episodes if e.id == episode_id)
        return lm, ep

    @app.get("/api/v1/episodes/{episode_id}")
    def get_episode(episode_id: str) -> dict:
        lm, ep = _lookup_episode(episode_id)
        summary = _episode_summary(lm, ep)
        summary["match_id"] = lm.match.meta.match_id
        summary["events"] = [event_to_dict(ev) for ev in ep.events]
        return summary

    @app.get("/api/v1/episodes/{episode_id}/frames")
    def get_frame(episode_id: str, t: float) -> dict:
        lm, ep = _lookup_episode(episode_id)
        if not ep.start <= t <= ep.end:
            raise HTTPException(
                422, f"t={t} outside episode window [{ep.start}, {ep.end}]"
            )
        idx = 0
        for i, ev in enumerate(ep.events):
            if ev.timestamp <= t:
                idx = i
        event = ep.events[idx]
        flag = lm.flags[ep.id][idx]
        response: dict = {
            "episode_id": ep.id,
            "t": t,
            "event": event_to_dict(event),
            "eligibility": {"green": flag.green, "reason": flag.reason},
            "evaluation": None,
            "suggestion": None,
        }
        if flag.green:
            state = event.freeze_frame
            assert state is not None and state.goalkeeper is not None
            evaluation = _evaluation_json(state.goalkeeper, state, cfg)
            evaluation["heatmap"] = goal_heatmap(state.goalkeeper, state, cfg)
            response["evaluation"] = evaluation
            if idx > 0:
                prev = ep.events[idx - 1]
                if prev.freeze_frame is not None and prev.freeze_frame.goalkeeper is not None:
                    decision = best_move(
                        prev.freeze_frame.goalkeeper,
                        event.timestamp - prev.timestamp,
                        state,
                        cfg,
                        actual_position=state.goalkeeper,
                    )
                    response["suggestion"] = _decision_json(decision)
        return response

    @app.post("/api/v1/simulate")
    def simulate(body: SimulateRequest) -> dict:
        gk = _as_pitch_point(body.goalkeeper, cfg, "goalkeeper")
        state = _build_state(body.state, gk, cfg)
        sim_cfg = cfg
        if body.targets is not None:
            points = tuple(
                _goal_point(p, cfg, f"targets[{i}]") for i, p in enumerate(body.targets)
            )
            if not points:
                raise HTTPException(422, "targets must not be empty")
            sim_cfg = dataclasses.replace(cfg, targets=ShotTargetConfig(points))
        rows = body.grid_rows if body.grid_rows is not None else cfg.heatmap_rows
        cols = body.grid_cols if body.grid_cols is not None else cfg.heatmap_cols
        if rows < 1 or cols < 1:
            raise HTTPException(422, f"heatmap grid must be at least 1x1, got {rows}x{cols}")
        if body.run_dt < 0:
            raise HTTPException(422, "run_dt must be >= 0")

        try:
            actual = _evaluation_json(gk, state, sim_cfg)
            heatmap = goal_heatmap(gk, state, sim_cfg, rows=rows, cols=cols)
            suggestion = _decision_json(best_move(gk, body.run_dt, state, sim_cfg))
            simulated = None
            simulated_heatmap = None
            if body.simulated_goalkeeper is not None:
                sim_gk = _as_pitch_point(body.simulated_goalkeeper, cfg, "simulated_goalkeeper")
                sim_state = dataclasses.replace(state, goalkeeper=sim_gk)
                simulated = _evaluation_json(sim_gk, sim_state, sim_cfg)
                simulated_heatmap = goal_heatmap(sim_gk, sim_state, sim_cfg, rows=rows, cols=cols)
        except IneligibleStateError as exc:
            raise HTTPException(422, str(exc)) from exc
        except KeeperLabError as exc:
            raise HTTPException(422, str(exc)) from exc

        return {
            "targets": [_goal_point_json(gp) for gp in sim_cfg.targets.points],
            "actual": actual,
            "simulated": simulated,
            "suggested": suggestion,
            "heatmap": heatmap,
            "simulated_heatmap": simulated_heatmap,
        }

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
