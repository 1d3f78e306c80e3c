/** Wire types for the keeperlab HTTP API (v1). */

export type XY = [number, number];
/** Goal-plane point: [y along the mouth, z above ground]. */
export type YZ = [number, number];

export interface FreezeFrame {
  goalkeeper: XY | null;
  defenders: XY[];
  attackers: XY[];
  ball_carrier: number | null;
  under_pressure: boolean;
}

export interface MatchEvent {
  id: string;
  timestamp: number;
  type: string;
  team: string;
  ball: XY;
  under_pressure: boolean;
  freeze_frame: FreezeFrame | null;
}

export interface EligibilityFlag {
  event_id: string;
  green: boolean;
  reason: string;
}

export interface MatchSummary {
  match_id: string;
  n_events: number;
  n_episodes: number;
  pitch_length: number;
  pitch_width: number;
  goal_width: number;
  goal_height: number;
}

export interface EpisodeSummary {
  id: string;
  start: number;
  end: number;
  n_events: number;
  n_green: number;
  flags: EligibilityFlag[];
}

export interface EpisodeDetail extends EpisodeSummary {
  match_id: string;
  events: MatchEvent[];
}

export interface PositionReport {
  position: XY;
  per_target_p_goal: number[];
  metric: number;
  worst_target: YZ;
  least_protected: YZ;
}

export interface CandidateReport {
  direction: string;
  position: XY;
  metric: number;
  per_target_p_goal: number[];
}

export interface SuggestionReport {
  candidates: CandidateReport[];
  chosen_index: number;
  chosen_direction: string;
}

export interface FrameResponse {
  episode_id: string;
  t: number;
  event: MatchEvent;
  eligibility: { green: boolean; reason: string };
  evaluation: (PositionReport & { heatmap: number[][] }) | null;
  suggestion: SuggestionReport | null;
}

export interface SimulateRequest {
  state: {
    goalkeeper?: XY | null;
    defenders: XY[];
    attackers: XY[];
    ball_carrier: number | null;
    under_pressure: boolean;
  };
  goalkeeper: XY;
  simulated_goalkeeper?: XY | null;
  targets?: YZ[] | null;
  grid_rows?: number;
  grid_cols?: number;
  run_dt?: number;
}

export interface SimulateResponse {
  targets: YZ[];
  actual: PositionReport;
  simulated: PositionReport | null;
  suggested: SuggestionReport;
  heatmap: number[][];
  simulated_heatmap: number[][] | null;
}

export interface EngineConfigDto {
  pitch: { length: number; width: number; margin: number };
  goal: { width: number; height: number };
  heatmap_rows: number;
  heatmap_cols: number;
  [key: string]: unknown;
}
