import { classColor, formatScore } from "./format.js";
import type { TopicSummary } from "./types.js";

// Word sizing range on the cards, in pixels.
const MIN_WORD_PX = 11;
const MAX_WORD_PX = 22;

/**
 * Render one card per topic: label, top words sized by phi, and an SS
 * gauge whose color and badge come from the service's class field.
 * Each card carries data-topic / data-ss / data-class verbatim.
 */
export function renderTopicBoard(
  root: HTMLElement,
  topics: TopicSummary[],
  onSelect?: (topic: number) => void,
): void {
  root.textContent = "";
  for (const topic of topics) {
    const card = document.createElement("article");
    card.className = "topic-card";
    card.dataset.topic = String(topic.topic);
    card.dataset.ss = String(topic.ss);
    card.dataset.class = topic.class;

    const header = document.createElement("header");
    const title = document.createElement("h3");
    title.textContent = topic.label;
    const meta = document.createElement("span");
    meta.className = "topic-meta";
    meta.textContent = `topic ${topic.topic} · ${topic.n_docs} docs`;
    header.append(title, meta);

    const words = document.createElement("div");
    words.className = "word-cloud";
    const maxPhi = topic.top_words.reduce((m, w) => Math.max(m, w.phi), 0);
    for (const word of topic.top_words) {
      const span = document.createElement("span");
      span.className = "topic-word";
      span.textContent = word.term;
      const scale = maxPhi > 0 ? word.phi / maxPhi : 0;
      span.style.fontSize = `${(MIN_WORD_PX + (MAX_WORD_PX - MIN_WORD_PX) * scale).toFixed(1)}px`;
      span.title = `phi ${word.phi.toFixed(4)}`;
      words.appendChild(span);
    }

    const gauge = document.createElement("div");
    gauge.className = "ss-gauge";
    const track = document.createElement("div");
    track.className = "ss-track";
    const fill = document.createElement("div");
    fill.className = "ss-fill";
    // SS lives in [-1, 1]; the fill grows from the center, colored by the
    // classification the service reported.
    const magnitude = Math.min(Math.abs(topic.ss), 1) * 50;
    fill.style.width = `${magnitude}%`;
    fill.style.left = topic.ss < 0 ? `${50 - magnitude}%` : "50%";
    fill.style.background = classColor(topic.class);
    track.appendChild(fill);

    const reading = document.createElement("div");
    reading.className = "ss-reading";
    const value = document.createElement("span");
    value.className = "ss-value";
    value.textContent = formatScore(topic.ss);
    const badge = document.createElement("span");
    badge.className = "class-badge";
    badge.textContent = topic.class;
    badge.style.background = classColor(topic.class);
    reading.append(value, badge);

    gauge.append(track, reading);
    card.append(header, words, gauge);
    if (onSelect) {
      card.addEventListener("click", () => onSelect(topic.topic));
    }
    root.appendChild(card);
  }
}
