// Presentation helpers. Colors key off strings the service already
// classified; nothing here re-derives a score.

const CLASS_COLORS: Record<string, string> = {
  opportunity: "#2e9e4f",
  risk: "#d64545",
  "needs-context": "#b8952e",
};

export function classColor(cls: string): string {
  return CLASS_COLORS[cls] ?? "#6b7687";
}

/** Red-to-green ramp for a compound score in [-1, 1]. */
export function compoundColor(compound: number): string {
  const c = Math.max(-1, Math.min(1, compound));
  const red = c < 0 ? 214 : Math.round(214 - 168 * c);
  const green = c > 0 ? 158 : Math.round(158 + 89 * c);
  const blue = c < 0 ? Math.round(69 + 20 * c) : Math.round(79 - 10 * c);
  return `rgb(${red}, ${green}, ${blue})`;
}

export function formatScore(value: number, digits = 4): string {
  const fixed = value.toFixed(digits);
  return value > 0 ? `+${fixed}` : fixed;
}
