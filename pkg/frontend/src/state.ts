/** Single view-state store: selection, playback, pin overrides, last response. */

import type {
  EpisodeDetail,
  EpisodeSummary,
  FreezeFrame,
  MatchSummary,
  SimulateResponse,
  XY,
} from "./types.js";

export interface PinOverrides {
  /** Simulated keeper position (the draggable black pin of the simulator). */
  simulatedGoalkeeper: XY | null;
  defenders: Map<number, XY>;
  attackers: Map<number, XY>;
}

export interface ViewState {
  matches: MatchSummary[];
  selectedMatch: string | null;
  episodes: EpisodeSummary[];
  selectedEpisode: EpisodeDetail | null;
  /** Playback clock in match seconds, always within the episode window. */
  clock: number;
  playing: boolean;
  speed: number;
  eventIndex: number;
  overrides: PinOverrides;
  lastResponse: SimulateResponse | null;
  message: string | null;
}

export function emptyOverrides(): PinOverrides {
  return { simulatedGoalkeeper: null, defenders: new Map(), attackers: new Map() };
}

export function initialState(): ViewState {
  return {
    matches: [],
    selectedMatch: null,
    episodes: [],
    selectedEpisode: null,
    clock: 0,
    playing: false,
    speed: 1,
    eventIndex: 0,
    overrides: emptyOverrides(),
    lastResponse: null,
    message: null,
  };
}

/** Index of the event at or nearest before t (clamped to the first event). */
export function eventIndexAt(events: { timestamp: number }[], t: number): number {
  let idx = 0;
  for (let i = 0; i < events.length; i++) {
    if (events[i].timestamp <= t) {
      idx = i;
    }
  }
  return idx;
}

export function clampClock(episode: { start: number; end: number }, t: number): number {
  return Math.min(Math.max(t, episode.start), episode.end);
}

/** Selecting an episode resets playback and drops all what-if overrides. */
export function selectEpisode(state: ViewState, episode: EpisodeDetail): ViewState {
  return {
    ...state,
    selectedEpisode: episode,
    clock: episode.start,
    playing: false,
    eventIndex: 0,
    overrides: emptyOverrides(),
    lastResponse: null,
    message: null,
  };
}

/** Seek the playback clock; the event index follows nearest-before. */
export function seek(state: ViewState, t: number): ViewState {
  const episode = state.selectedEpisode;
  if (!episode) {
    return state;
  }
  const clock = clampClock(episode, t);
  return { ...state, clock, eventIndex: eventIndexAt(episode.events, clock) };
}

/** The frame to draw: the current event's freeze frame with drag overrides. */
export function effectiveFrame(state: ViewState): FreezeFrame | null {
  const episode = state.selectedEpisode;
  if (!episode) {
    return null;
  }
  const frame = episode.events[state.eventIndex]?.freeze_frame;
  if (!frame) {
    return null;
  }
  const defenders = frame.defenders.map((p, i) => state.overrides.defenders.get(i) ?? p);
  const attackers = frame.attackers.map((p, i) => state.overrides.attackers.get(i) ?? p);
  return { ...frame, defenders, attackers };
}
