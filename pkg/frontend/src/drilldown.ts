import { compoundColor, formatScore } from "./format.js";
import type { DocumentDetail, TopicDocuments } from "./types.js";

/**
 * Render the cluster member list for one topic. Rows keep the order the
 * service returned (sorted by theta there); each row shows theta, the
 * document compound, and a per-sentence sentiment heat strip when the
 * document detail is available.
 */
export function renderDrilldown(
  root: HTMLElement,
  topicDocs: TopicDocuments,
  details: Map<string, DocumentDetail>,
  onPick?: (docId: string) => void,
): void {
  root.textContent = "";
  const heading = document.createElement("h3");
  heading.textContent = `topic ${topicDocs.topic} documents`;
  root.appendChild(heading);

  if (topicDocs.documents.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty";
    empty.textContent = "No documents have this topic as dominant.";
    root.appendChild(empty);
    return;
  }

  const list = document.createElement("ul");
  list.className = "doc-list";
  for (const member of topicDocs.documents) {
    const item = document.createElement("li");
    item.className = "doc-row";
    item.dataset.docId = member.doc_id;

    const head = document.createElement("div");
    head.className = "doc-row-head";
    const name = document.createElement("span");
    name.className = "doc-id";
    name.textContent = member.doc_id;
    const theta = document.createElement("span");
    theta.className = "doc-theta";
    theta.textContent = `θ ${member.theta.toFixed(3)}`;
    const compound = document.createElement("span");
    compound.className = "doc-compound";
    compound.textContent = `CS ${formatScore(member.compound)}`;
    compound.style.color = compoundColor(member.compound);
    head.append(name, theta, compound);
    item.appendChild(head);

    const detail = details.get(member.doc_id);
    if (detail) {
      const title = document.createElement("div");
      title.className = "doc-title";
      title.textContent = detail.title;
      item.appendChild(title);

      const strip = document.createElement("div");
      strip.className = "heat-strip";
      for (const sentence of detail.sentences) {
        const cell = document.createElement("span");
        cell.className = "heat-cell";
        cell.style.background = compoundColor(sentence.compound);
        cell.title = `${formatScore(sentence.compound)}  ${sentence.text}`;
        strip.appendChild(cell);
      }
      item.appendChild(strip);
    }

    if (onPick) {
      item.addEventListener("click", () => onPick(member.doc_id));
    }
    list.appendChild(item);
  }
  root.appendChild(list);
}
