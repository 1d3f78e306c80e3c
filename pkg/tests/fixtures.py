"""Hand-built fixtures shared between module tests and the acceptance suite."""

from __future__ import annotations

from keeperlab import Episode, Event, GameState, Match, MatchMeta, PitchPoint


def frame(gk, ball, defenders=((8.0, 2.0), (6.0, -1.0)), extra_attackers=((18.0, 6.0),),
          under_pressure=False) -> GameState:
    attackers = (PitchPoint(*ball),) + tuple(PitchPoint(*p) for p in extra_attackers)
    return GameState(
        goalkeeper=None if gk is None else PitchPoint(*gk),
        defenders=tuple(PitchPoint(*p) for p in defenders),
        attackers=attackers,
        ball_carrier=0,
        under_pressure=under_pressure,
    )


def twelve_event_episode() -> tuple[Episode, list[str]]:
    """Twelve events exercising every eligibility rule, ending in a shot.

    Returns the episode and the expected flag reasons in order.
    """
    rows = [
        # (type, team, ball, gk or None, has_frame, expected reason)
        ("pass", "attacking", (45.0, 5.0), (2.0, 0.0), True, "ball outside the defended zone"),
        ("pass", "attacking", (30.0, 3.0), (2.0, 0.3), True, "ok"),
        ("carry", "attacking", (28.0, 2.0), None, False, "no freeze frame"),
        ("pass", "attacking", (25.0, 0.0), None, True, "goalkeeper position unknown"),
        ("clearance", "defending", (24.0, 1.0), (2.2, 0.1), True, "not attacking possession"),
        ("pass", "attacking", (22.0, -2.0), (2.4, -0.2), True, "ok"),
        ("carry", "attacking", (31.5, 0.0), (2.5, 0.0), True, "ok"),
        ("carry", "attacking", (31.6, 0.0), (2.5, 0.0), True, "ball outside the defended zone"),
        ("pass", "attacking", (20.0, 4.0), (2.6, 0.4), True, "ok"),
        ("carry", "attacking", (15.0, 2.0), (2.2, 0.5), True, "ok"),
        ("pass", "attacking", (12.0, 1.0), (1.8, 0.2), True, "ok"),
        ("shot", "attacking", (10.0, 0.0), (1.5, 0.0), True, "ok"),
    ]
    events = []
    expected = []
    for i, (etype, team, ball, gk, has_frame, reason) in enumerate(rows):
        events.append(
            Event(
                id=f"fx{i:02d}",
                timestamp=float(2 * i),
                type=etype,
                team=team,
                ball=PitchPoint(*ball),
                freeze_frame=frame(gk, ball) if has_frame else None,
            )
        )
        expected.append(reason)
    episode = Episode(
        id="fixture-e000",
        events=tuple(events),
        start=events[0].timestamp,
        end=events[-1].timestamp,
    )
    return episode, expected


def minimal_match() -> Match:
    """One shot event with a freeze frame; the smallest valid match."""
    shot = Event(
        id="only",
        timestamp=4.0,
        type="shot",
        team="attacking",
        ball=PitchPoint(10.0, 0.0),
        freeze_frame=frame((1.5, 0.0), (10.0, 0.0)),
    )
    return Match(meta=MatchMeta(match_id="minimal"), events=(shot,))
