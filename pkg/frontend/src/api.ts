/** API client. All numbers shown anywhere in the UI come from these calls. */

import type {
  EngineConfigDto,
  EpisodeDetail,
  EpisodeSummary,
  FrameResponse,
  MatchSummary,
  SimulateRequest,
  SimulateResponse,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function getJson<T>(fetchFn: FetchLike, url: string): Promise<T> {
  const res = await fetchFn(url);
  if (!res.ok) {
    throw new Error(`GET ${url} failed: ${res.status}`);
  }
  return (await res.json()) as T;
}

export class ApiClient {
  constructor(
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
    private readonly base: string = "/api/v1",
  ) {}

  config(): Promise<EngineConfigDto> {
    return getJson(this.fetchFn, `${this.base}/config`);
  }

  matches(): Promise<MatchSummary[]> {
    return getJson(this.fetchFn, `${this.base}/matches`);
  }

  episodes(matchId: string): Promise<EpisodeSummary[]> {
    return getJson(this.fetchFn, `${this.base}/matches/${encodeURIComponent(matchId)}/episodes`);
  }

  episode(episodeId: string): Promise<EpisodeDetail> {
    return getJson(this.fetchFn, `${this.base}/episodes/${encodeURIComponent(episodeId)}`);
  }

  frame(episodeId: string, t: number): Promise<FrameResponse> {
    return getJson(
      this.fetchFn,
      `${this.base}/episodes/${encodeURIComponent(episodeId)}/frames?t=${t}`,
    );
  }

  async simulate(body: SimulateRequest, signal?: AbortSignal): Promise<SimulateResponse> {
    const res = await this.fetchFn(`${this.base}/simulate`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
    if (!res.ok) {
      const detail = await res.text();
      throw new Error(`simulate failed (${res.status}): ${detail}`);
    }
    return (await res.json()) as SimulateResponse;
  }
}

/**
 * Latest-wins funnel for /simulate during drag gestures: issuing a new
 * request aborts the one in flight, so at most one request is ever live and
 * only the most recent response reaches the UI.
 */
export class SimulateFunnel {
  private controller: AbortController | null = null;
  private seq = 0;

  constructor(private readonly client: ApiClient) {}

  get inFlight(): boolean {
    return this.controller !== null;
  }

  /** Resolves with the response for the latest request, or null if a newer
   * request superseded this one before it finished. */
  async send(body: SimulateRequest): Promise<SimulateResponse | null> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    const ticket = ++this.seq;
    try {
      const response = await this.client.simulate(body, controller.signal);
      if (ticket !== this.seq) {
        return null; // a newer drag sample superseded this response
      }
      return response;
    } catch (err) {
      if (controller.signal.aborted) {
        return null;
      }
      throw err;
    } finally {
      if (this.controller === controller) {
        this.controller = null;
      }
    }
  }
}
