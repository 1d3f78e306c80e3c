/** Freeze-frame playback clock (the tool has no video assets; synchronized
 * positions carry the tactical story). */

export interface ClockState {
  t: number;
  playing: boolean;
  speed: number;
}

/** Advance the clock by a wall-clock delta; returns the new time and whether
 * the end of the window was reached. */
export function tick(
  state: ClockState,
  wallDeltaSeconds: number,
  windowStart: number,
  windowEnd: number,
): { t: number; done: boolean } {
  if (!state.playing) {
    return { t: state.t, done: false };
  }
  const advanced = state.t + wallDeltaSeconds * state.speed;
  if (advanced >= windowEnd) {
    return { t: windowEnd, done: true };
  }
  return { t: Math.max(advanced, windowStart), done: false };
}

/** Wall-clock seconds needed to play a window at a given speed. */
export function wallClockDuration(windowStart: number, windowEnd: number, speed: number): number {
  return (windowEnd - windowStart) / speed;
}

export const SPEED_STEPS = [0.5, 1, 2, 4] as const;
