/** Episode browser: matches, episodes, and the green/black event list. */

import type { EpisodeDetail, EpisodeSummary, MatchSummary } from "./types.js";

export interface EpisodeListCallbacks {
  onSelectMatch(matchId: string): void;
  onSelectEpisode(episodeId: string): void;
  onSelectEvent(timestamp: number): void;
}

export class EpisodeListPanel {
  constructor(
    private readonly matchSelect: HTMLSelectElement,
    private readonly episodeSelect: HTMLSelectElement,
    private readonly eventList: HTMLElement,
    private readonly callbacks: EpisodeListCallbacks,
  ) {
    matchSelect.addEventListener("change", () => callbacks.onSelectMatch(matchSelect.value));
    episodeSelect.addEventListener("change", () =>
      callbacks.onSelectEpisode(episodeSelect.value),
    );
  }

  renderMatches(matches: MatchSummary[], selected: string | null): void {
    this.matchSelect.replaceChildren(
      ...matches.map((m) => {
        const option = document.createElement("option");
        option.value = m.match_id;
        option.textContent = `${m.match_id} (${m.n_episodes} episodes)`;
        option.selected = m.match_id === selected;
        return option;
      }),
    );
  }

  renderEpisodes(episodes: EpisodeSummary[], selected: string | null): void {
    this.episodeSelect.replaceChildren(
      ...episodes.map((ep) => {
        const option = document.createElement("option");
        option.value = ep.id;
        option.textContent = `${ep.id} — ${ep.n_events} events, ${ep.n_green} green`;
        option.selected = ep.id === selected;
        return option;
      }),
    );
  }

  /** Event rows in timestamp order; green rows admit the position model. */
  renderEvents(episode: EpisodeDetail | null, currentIndex: number): void {
    if (!episode) {
      this.eventList.replaceChildren();
      return;
    }
    this.eventList.replaceChildren(
      ...episode.events.map((ev, i) => {
        const flag = episode.flags[i];
        const row = document.createElement("li");
        row.className = flag.green ? "event green" : "event black";
        if (i === currentIndex) {
          row.classList.add("current");
        }
        row.title = flag.reason;
        const label = document.createElement("span");
        label.textContent = `${ev.timestamp.toFixed(2)}s ${ev.type}`;
        row.append(label);
        row.addEventListener("click", () => this.callbacks.onSelectEvent(ev.timestamp));
        return row;
      }),
    );
  }
}
