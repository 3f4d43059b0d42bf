// Question formulation, kept byte-compatible with the service side so a
// pre-filled question equals what `agrisk qa` would ask for the same topic.

export const DEFAULT_TEMPLATE = "What is said about {w1}, {w2} and {w3}?";

const SLOT = /\{w(\d+)\}/g;

interface Slot {
  start: number;
  end: number;
}

/**
 * Fill the template's {w1}..{wN} slots with topic top words.
 *
 * With at least as many words as slots, substitution is positional and
 * verbatim. With fewer, the whole slot region (first slot through last
 * slot) collapses to a natural enumeration of the available words.
 */
export function formulateQuestion(
  topWords: string[],
  template: string = DEFAULT_TEMPLATE,
): string {
  const words = topWords.filter((w) => w);
  if (words.length === 0) {
    throw new Error("at least one top word is required");
  }
  const slots: Slot[] = [];
  for (const match of template.matchAll(SLOT)) {
    slots.push({ start: match.index ?? 0, end: (match.index ?? 0) + match[0].length });
  }
  if (slots.length === 0) {
    throw new Error("template has no {wN} slots");
  }
  if (words.length >= slots.length) {
    let out = "";
    let cursor = 0;
    slots.forEach((slot, i) => {
      out += template.slice(cursor, slot.start) + words[i];
      cursor = slot.end;
    });
    return out + template.slice(cursor);
  }
  const phrase =
    words.length === 1
      ? words[0]
      : words.slice(0, -1).join(", ") + " and " + words[words.length - 1];
  const first = slots[0] as Slot;
  const last = slots[slots.length - 1] as Slot;
  return template.slice(0, first.start) + phrase + template.slice(last.end);
}
