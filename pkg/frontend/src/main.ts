/** App bootstrap: wires the panels to the API around one ViewState. */

import { ApiClient, SimulateFunnel } from "./api.js";
import { EpisodeListPanel } from "./episodeList.js";
import { FieldView } from "./fieldView.js";
import type { PinId } from "./fieldView.js";
import { GoalProjection } from "./goalProjection.js";
import {
  effectiveFrame,
  emptyOverrides,
  initialState,
  seek,
  selectEpisode,
} from "./state.js";
import type { ViewState } from "./state.js";
import { SPEED_STEPS, tick } from "./timeline.js";
import type { EngineConfigDto, SimulateRequest, XY } from "./types.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

async function boot(): Promise<void> {
  const api = new ApiClient();
  const funnel = new SimulateFunnel(api);
  const config: EngineConfigDto = await api.config();

  let state: ViewState = initialState();
  const message = el<HTMLElement>("message");
  const metricActual = el<HTMLElement>("metric-actual");
  const metricSimulated = el<HTMLElement>("metric-simulated");

  const goalPanel = new GoalProjection(
    el<HTMLCanvasElement>("goal-canvas"),
    el<HTMLElement>("goal-hover"),
  );

  const field = new FieldView(el<HTMLCanvasElement>("field-canvas"), {
    onDrag: (pin, position) => onDrag(pin, position),
    onInvalidDrop: () => {
      state.message = "that placement is off the pitch; pin snapped back";
      draw();
    },
  });

  const panel = new EpisodeListPanel(
    el<HTMLSelectElement>("match-select"),
    el<HTMLSelectElement>("episode-select"),
    el<HTMLElement>("event-list"),
    {
      onSelectMatch: (matchId) => loadEpisodes(matchId),
      onSelectEpisode: (episodeId) => loadEpisode(episodeId),
      onSelectEvent: (timestamp) => {
        state = seek({ ...state, playing: false }, timestamp);
        void refreshSimulation();
        draw();
      },
    },
  );

  const playToggle = el<HTMLButtonElement>("play-toggle");
  const speedButton = el<HTMLButtonElement>("speed-toggle");
  const scrubber = el<HTMLInputElement>("scrubber");

  playToggle.addEventListener("click", () => {
    state.playing = !state.playing;
    draw();
  });
  speedButton.addEventListener("click", () => {
    const idx = SPEED_STEPS.indexOf(state.speed as (typeof SPEED_STEPS)[number]);
    state.speed = SPEED_STEPS[(idx + 1) % SPEED_STEPS.length];
    draw();
  });
  scrubber.addEventListener("input", () => {
    const episode = state.selectedEpisode;
    if (!episode) {
      return;
    }
    const t = episode.start + (Number(scrubber.value) / 1000) * (episode.end - episode.start);
    state = seek({ ...state, playing: false }, t);
    void refreshSimulation();
    draw();
  });

  let lastTick = performance.now();
  function loop(now: number): void {
    const wallDelta = (now - lastTick) / 1000;
    lastTick = now;
    const episode = state.selectedEpisode;
    if (episode && state.playing) {
      const moved = tick(
        { t: state.clock, playing: state.playing, speed: state.speed },
        wallDelta,
        episode.start,
        episode.end,
      );
      const previousIndex = state.eventIndex;
      state = seek(state, moved.t);
      if (moved.done) {
        state.playing = false;
      }
      if (state.eventIndex !== previousIndex) {
        void refreshSimulation();
      }
      draw();
    }
    requestAnimationFrame(loop);
  }

  async function loadMatches(): Promise<void> {
    state.matches = await api.matches();
    if (state.matches.length) {
      await loadEpisodes(state.matches[0].match_id);
    } else {
      draw();
    }
  }

  async function loadEpisodes(matchId: string): Promise<void> {
    state.selectedMatch = matchId;
    state.episodes = await api.episodes(matchId);
    if (state.episodes.length) {
      await loadEpisode(state.episodes[0].id);
    } else {
      state.selectedEpisode = null;
      draw();
    }
  }

  async function loadEpisode(episodeId: string): Promise<void> {
    const detail = await api.episode(episodeId);
    state = selectEpisode(state, detail);
    await refreshSimulation();
    draw();
  }

  function simulateBody(): SimulateRequest | null {
    const frame = effectiveFrame(state);
    if (!frame || !frame.goalkeeper || frame.ball_carrier === null) {
      return null;
    }
    return {
      state: {
        defenders: frame.defenders,
        attackers: frame.attackers,
        ball_carrier: frame.ball_carrier,
        under_pressure: frame.under_pressure,
      },
      goalkeeper: frame.goalkeeper,
      simulated_goalkeeper: state.overrides.simulatedGoalkeeper,
      run_dt: 1.0,
    };
  }

  async function refreshSimulation(): Promise<void> {
    const body = simulateBody();
    if (!body) {
      state.lastResponse = null;
      state.message = currentEligibility() ?? "no evaluable frame here";
      draw();
      return;
    }
    try {
      const response = await funnel.send(body);
      if (response) {
        state.lastResponse = response;
        state.message = null;
        draw();
      }
    } catch (err) {
      state.lastResponse = null;
      state.message = String(err instanceof Error ? err.message : err);
      draw();
    }
  }

  function currentEligibility(): string | null {
    const episode = state.selectedEpisode;
    if (!episode) {
      return null;
    }
    const flag = episode.flags[state.eventIndex];
    return flag && !flag.green ? `event not evaluable: ${flag.reason}` : null;
  }

  function onDrag(pin: PinId, position: XY): void {
    if (pin.kind === "goalkeeper" || pin.kind === "simulated_goalkeeper") {
      // Dragging the keeper moves the simulated keeper (black pin); the
      // actual position from tracking stays put for comparison.
      state.overrides.simulatedGoalkeeper = position;
    } else if (pin.kind === "defender") {
      state.overrides.defenders.set(pin.index, position);
    } else {
      state.overrides.attackers.set(pin.index, position);
    }
    void refreshSimulation();
    draw();
  }

  el<HTMLButtonElement>("reset-pins").addEventListener("click", () => {
    state.overrides = emptyOverrides();
    void refreshSimulation();
    draw();
  });

  function draw(): void {
    panel.renderMatches(state.matches, state.selectedMatch);
    panel.renderEpisodes(state.episodes, state.selectedEpisode?.id ?? null);
    panel.renderEvents(state.selectedEpisode, state.eventIndex);
    playToggle.textContent = state.playing ? "pause" : "play";
    speedButton.textContent = `${state.speed}x`;
    message.textContent = state.message ?? "";
    const episode = state.selectedEpisode;
    if (episode) {
      const span = episode.end - episode.start || 1;
      scrubber.value = String(Math.round(((state.clock - episode.start) / span) * 1000));
      el<HTMLElement>("clock").textContent = `${state.clock.toFixed(2)}s`;
    }
    const frame = effectiveFrame(state);
    const response = state.lastResponse;
    if (frame) {
      field.render({
        frame,
        simulatedGoalkeeper: state.overrides.simulatedGoalkeeper,
        response,
        pitchLength: config.pitch.length,
        pitchWidth: config.pitch.width,
        goalWidth: config.goal.width,
      });
    }
    if (response) {
      const heatmap = response.simulated_heatmap ?? response.heatmap;
      goalPanel.render(heatmap, config.goal.width, config.goal.height, response.targets);
      metricActual.textContent = response.actual.metric.toFixed(3);
      metricSimulated.textContent = response.simulated
        ? response.simulated.metric.toFixed(3)
        : "—";
    } else {
      goalPanel.clear();
      metricActual.textContent = "—";
      metricSimulated.textContent = "—";
    }
  }

  await loadMatches();
  requestAnimationFrame(loop);
}

boot().catch((err) => {
  const message = document.getElementById("message");
  if (message) {
    message.textContent = `failed to start: ${err}`;
  }
});
