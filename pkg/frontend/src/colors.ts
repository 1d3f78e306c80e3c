/** Pin palette and heatmap shading. */

// Pin colors follow the tool's legend: defenders white, attackers blue, the
// ball carrier blue with a black border, the actual keeper black, suggested
// keeper positions green.
export const PIN_COLORS = {
  defender: "#f5f5f5",
  attacker: "#2b6cb0",
  carrierBorder: "#111111",
  goalkeeper: "#111111",
  simulatedGoalkeeper: "#4a2f85",
  suggestion: "#2f9e44",
} as const;

/**
 * Goal-projection cell shade: green, darker for higher conceding
 * probability (dark cells are the hardest to defend). Luminance is strictly
 * decreasing in p.
 */
export function heatShade(pGoal: number): string {
  const p = Math.min(Math.max(pGoal, 0), 1);
  // Interpolate toward a dark pitch green as p grows.
  const light = { r: 223, g: 245, b: 225 };
  const dark = { r: 8, g: 66, b: 24 };
  const r = Math.round(light.r + (dark.r - light.r) * p);
  const g = Math.round(light.g + (dark.g - light.g) * p);
  const b = Math.round(light.b + (dark.b - light.b) * p);
  return `rgb(${r}, ${g}, ${b})`;
}

/** Relative luminance of an rgb(...) string; used to verify monotone shading. */
export function luminance(rgb: string): number {
  const match = rgb.match(/rgb\((\d+), (\d+), (\d+)\)/);
  if (!match) {
    throw new Error(`not an rgb() string: ${rgb}`);
  }
  const [r, g, b] = [Number(match[1]), Number(match[2]), Number(match[3])];
  return 0.2126 * r + 0.7152 * g + 0.0722 * b;
}
