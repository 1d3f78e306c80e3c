"""Match data model, JSON file format, episode segmentation and eligibility.

The on-disk format is plain JSON with two top-level keys, ``meta`` and
``events`` (plus ``schema_version``); positions are ``[x, y]`` meter pairs in
the package coordinate frame. See docs/match-file-schema.md for the frozen
field names.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import MatchFileError
from .geometry import PitchConfig, PitchPoint

SCHEMA_VERSION = 1

EVENT_TYPES = ("pass", "carry", "shot", "clearance", "other")
TEAMS = ("attacking", "defending")

MAX_PLAYERS_PER_SIDE = 11

# Episode segmentation: how far back an episode may reach before its shot.
EPISODE_WINDOW_S = 15.0
EPISODE_MAX_DURATION_S = 30.0


@dataclass(frozen=True, slots=True)
class GameState:
    """All player positions from one freeze frame.

    ``attackers`` are the team in possession attacking the defended goal;
    ``defenders`` are the outfield players defending it. The goalkeeper is
    carried separately and may be unknown (None).
    """

    goalkeeper: PitchPoint | None
    defenders: tuple[PitchPoint, ...]
    attackers: tuple[PitchPoint, ...]
    ball_carrier: int | None
    under_pressure: bool = False

    def __post_init__(self):
        if len(self.defenders) > MAX_PLAYERS_PER_SIDE:
            raise ValueError(f"too many defenders ({len(self.defenders)})")
        if len(self.attackers) > MAX_PLAYERS_PER_SIDE:
            raise ValueError(f"too many attackers ({len(self.attackers)})")
        if self.ball_carrier is not None and not (
            0 <= self.ball_carrier < len(self.attackers)
        ):
            raise ValueError(f"ball_carrier index {self.ball_carrier} out of range")

    @property
    def shooter(self) -> PitchPoint | None:
        if self.ball_carrier is None:
            return None
        return self.attackers[self.ball_carrier]


@dataclass(frozen=True, slots=True)
class Event:
    id: str
    timestamp: float
    type: str
    team: str
    ball: PitchPoint
    under_pressure: bool = False
    freeze_frame: GameState | None = None

    def __post_init__(self):
        if self.type not in EVENT_TYPES:
            raise ValueError(f"unknown event type {self.type!r}")
        if self.team not in TEAMS:
            raise ValueError(f"unknown team {self.team!r}")
        if self.type == "shot" and self.freeze_frame is None:
            raise ValueError(f"shot event {self.id!r} must carry a freeze frame")


@dataclass(frozen=True, slots=True)
class MatchMeta:
    match_id: str = "match-000"
    pitch_length: float = 105.0
    pitch_width: float = 68.0
    goal_width: float = 7.32
    goal_height: float = 2.44

    def pitch(self) -> PitchConfig:
        return PitchConfig(length=self.pitch_length, width=self.pitch_width)


@dataclass(frozen=True, slots=True)
class Match:
    meta: MatchMeta
    events: tuple[Event, ...]

    def __post_init__(self):
        last = None
        for ev in self.events:
            if last is not None and ev.timestamp < last:
                raise ValueError(
                    f"event {ev.id!r} timestamp {ev.timestamp} decreases"
                )
            last = ev.timestamp


@dataclass(frozen=True, slots=True)
class Episode:
    """Event run ending in a shot. Built by segment_episodes, never overlapping
    an earlier shot."""

    id: str
    events: tuple[Event, ...]
    start: float
    end: float

    def __post_init__(self):
        if not self.events or self.events[-1].type != "shot":
            raise ValueError("episode must end in a shot event")
        if self.end - self.start > EPISODE_MAX_DURATION_S:
            raise ValueError("episode exceeds the maximum duration")


@dataclass(frozen=True, slots=True)
class EligibilityFlag:
    """Per-event evaluation flag: green events admit the position model."""

    event_id: str
    green: bool
    reason: str  # "ok" for green, else why the event is black


# ---------------------------------------------------------------------------
# Parsing / serialization
# ---------------------------------------------------------------------------


def _require(obj: dict, key: str, path: str) -> Any:
    if key not in obj:
        raise MatchFileError(f"missing required field {key!r}", path)
    return obj[key]


def _as_number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MatchFileError(f"expected a number, got {value!r}", path)
    return float(value)


def _as_point(value: Any, path: str, pitch: PitchConfig | None = None) -> PitchPoint:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise MatchFileError(f"expected an [x, y] pair, got {value!r}", path)
    try:
        point = PitchPoint(_as_number(value[0], path), _as_number(value[1], path))
    except ValueError as exc:
        raise MatchFileError(str(exc), path) from exc
    if pitch is not None and not pitch.contains(point):
        raise MatchFileError(
            f"position ({point.x}, {point.y}) is outside the pitch (plus margin)", path
        )
    return point


def _parse_frame(obj: Any, path: str, pitch: PitchConfig) -> GameState:
    if not isinstance(obj, dict):
        raise MatchFileError("freeze_frame must be an object", path)
    gk_raw = obj.get("goalkeeper")
    goalkeeper = None if gk_raw is None else _as_point(gk_raw, f"{path}.goalkeeper", pitch)
    defenders = tuple(
        _as_point(v, f"{path}.defenders[{i}]", pitch)
        for i, v in enumerate(obj.get("defenders", []))
    )
    attackers = tuple(
        _as_point(v, f"{path}.attackers[{i}]", pitch)
        for i, v in enumerate(obj.get("attackers", []))
    )
    carrier = obj.get("ball_carrier")
    if carrier is not None and (isinstance(carrier, bool) or not isinstance(carrier, int)):
        raise MatchFileError("ball_carrier must be an integer index or null", path)
    try:
        return GameState(
            goalkeeper=goalkeeper,
            defenders=defenders,
            attackers=attackers,
            ball_carrier=carrier,
            under_pressure=bool(obj.get("under_pressure", False)),
        )
    except ValueError as exc:
        raise MatchFileError(str(exc), path) from exc


def _parse_event(obj: Any, path: str, pitch: PitchConfig) -> Event:
    if not isinstance(obj, dict):
        raise MatchFileError("event must be an object", path)
    frame_raw = obj.get("freeze_frame")
    frame = None if frame_raw is None else _parse_frame(frame_raw, f"{path}.freeze_frame", pitch)
    try:
        return Event(
            id=str(_require(obj, "id", path)),
            timestamp=_as_number(_require(obj, "timestamp", path), f"{path}.timestamp"),
            type=_require(obj, "type", path),
            team=_require(obj, "team", path),
            ball=_as_point(_require(obj, "ball", path), f"{path}.ball", pitch),
            under_pressure=bool(obj.get("under_pressure", False)),
            freeze_frame=frame,
        )
    except ValueError as exc:
        raise MatchFileError(str(exc), path) from exc


def match_from_dict(data: Any) -> Match:
    if not isinstance(data, dict):
        raise MatchFileError("top level must be an object")
    version = data.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise MatchFileError(f"unsupported schema_version {version!r}", "schema_version")
    meta_raw = _require(data, "meta", "meta")
    if not isinstance(meta_raw, dict):
        raise MatchFileError("meta must be an object", "meta")
    meta = MatchMeta(
        match_id=str(meta_raw.get("match_id", "match-000")),
        pitch_length=_as_number(meta_raw.get("pitch_length", 105.0), "meta.pitch_length"),
        pitch_width=_as_number(meta_raw.get("pitch_width", 68.0), "meta.pitch_width"),
        goal_width=_as_number(meta_raw.get("goal_width", 7.32), "meta.goal_width"),
        goal_height=_as_number(meta_raw.get("goal_height", 2.44), "meta.goal_height"),
    )
    events_raw = _require(data, "events", "events")
    if not isinstance(events_raw, list):
        raise MatchFileError("events must be an array", "events")
    pitch = meta.pitch()
    events = tuple(
        _parse_event(ev, f"events[{i}]", pitch) for i, ev in enumerate(events_raw)
    )
    seen: set[str] = set()
    for i, ev in enumerate(events):
        if ev.id in seen:
            raise MatchFileError(f"duplicate event id {ev.id!r}", f"events[{i}].id")
        seen.add(ev.id)
    try:
        return Match(meta=meta, events=events)
    except ValueError as exc:
        raise MatchFileError(str(exc), "events") from exc


def parse_match_text(text: str) -> Match:
    """Parse match JSON text. Raises MatchFileError with field context on any
    schema violation."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatchFileError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return match_from_dict(data)


def parse_match(path: str | Path) -> Match:
    """Parse a match file from disk."""
    return parse_match_text(Path(path).read_text(encoding="utf-8"))


def _frame_to_dict(frame: GameState) -> dict:
    return {
        "goalkeeper": None if frame.goalkeeper is None else [frame.goalkeeper.x, frame.goalkeeper.y],
        "defenders": [[p.x, p.y] for p in frame.defenders],
        "attackers": [[p.x, p.y] for p in frame.attackers],
        "ball_carrier": frame.ball_carrier,
        "under_pressure": frame.under_pressure,
    }


def event_to_dict(ev: Event) -> dict:
    return {
        "id": ev.id,
        "timestamp": ev.timestamp,
        "type": ev.type,
        "team": ev.team,
        "ball": [ev.ball.x, ev.ball.y],
        "under_pressure": ev.under_pressure,
        "freeze_frame": None if ev.freeze_frame is None else _frame_to_dict(ev.freeze_frame),
    }


def match_to_dict(match: Match) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "meta": {
            "match_id": match.meta.match_id,
            "pitch_length": match.meta.pitch_length,
            "pitch_width": match.meta.pitch_width,
            "goal_width": match.meta.goal_width,
            "goal_height": match.meta.goal_height,
        },
        "events": [event_to_dict(ev) for ev in match.events],
    }


def serialize_match(match: Match) -> str:
    return json.dumps(match_to_dict(match), indent=2) + "\n"


def save_match(match: Match, path: str | Path) -> None:
    Path(path).write_text(serialize_match(match), encoding="utf-8")


# ---------------------------------------------------------------------------
# Episodes and eligibility
# ---------------------------------------------------------------------------


def segment_episodes(match: Match) -> list[Episode]:
    """Cut the match into episodes, one per shot.

    Each episode reaches back from its shot to whichever comes latest: the
    15 s window start, the start of the contiguous attacking-possession run,
    or the moment just after the previous shot (episodes never overlap).
    """
    episodes: list[Episode] = []
    events = match.events
    prev_shot_idx = -1
    for i, ev in enumerate(events):
        if ev.type != "shot":
            continue
        window_start = ev.timestamp - EPISODE_WINDOW_S
        start_idx = i
        for j in range(i - 1, prev_shot_idx, -1):
            if events[j].timestamp < window_start:
                break
            if events[j].team != "attacking":
                break
            start_idx = j
        span = events[start_idx : i + 1]
        episodes.append(
            Episode(
                id=f"{match.meta.match_id}-e{len(episodes):03d}",
                events=tuple(span),
                start=span[0].timestamp,
                end=ev.timestamp,
            )
        )
        prev_shot_idx = i
    return episodes


def eligibility_reason(
    event: Event,
    pitch: PitchConfig | None = None,
    eligibility_fraction: float = 0.3,
) -> str:
    """Why an event is black, or "ok" when the position model applies.

    Green requires a freeze frame with a known goalkeeper position, the ball
    inside the defended zone (x <= fraction * pitch length), and
    attacking-team possession.
    """
    pitch = pitch or PitchConfig()
    max_x = eligibility_fraction * pitch.length
    if event.freeze_frame is None:
        return "no freeze frame"
    if event.freeze_frame.goalkeeper is None:
        return "goalkeeper position unknown"
    if event.team != "attacking":
        return "not attacking possession"
    if not 0 < event.ball.x <= max_x:
        return "ball outside the defended zone"
    return "ok"


def flag_eligibility(
    episode: Episode,
    pitch: PitchConfig | None = None,
    eligibility_fraction: float = 0.3,
) -> list[EligibilityFlag]:
    """Green/black flag per event of an episode."""
    flags: list[EligibilityFlag] = []
    for ev in episode.events:
        reason = eligibility_reason(ev, pitch, eligibility_fraction)
        flags.append(EligibilityFlag(event_id=ev.id, green=(reason == "ok"), reason=reason))
    return flags
