import { locateAnswer, renderHighlighted } from "./highlight.js";
import { formulateQuestion } from "./question.js";
import { formatScore } from "./format.js";
import type { SessionLog } from "./session.js";
import type {
  DocumentDetail,
  QAResponse,
  Scorer,
  TopicSummary,
  Verdict,
} from "./types.js";

/** The slice of the API client the panel needs; easy to stub in tests. */
export interface QAClient {
  qa(docId: string, question: string, scorer: Scorer): Promise<QAResponse>;
}

/**
 * The QA validation panel: a question pre-filled from the topic's top
 * words, a scorer toggle, the answer highlighted inside the document, and
 * a verdict control that records the round into the session log.
 *
 * Concurrent asks are allowed; rounds render in arrival order, each
 * tagged with its request id.
 */
export class QAPanel {
  private readonly root: HTMLElement;
  private readonly client: QAClient;
  private readonly log: SessionLog;

  private topic: TopicSummary | null = null;
  private doc: DocumentDetail | null = null;
  private lastResponse: QAResponse | null = null;
  private requestSeq = 0;

  readonly questionInput: HTMLInputElement;
  readonly scorerSelect: HTMLSelectElement;
  readonly askButton: HTMLButtonElement;
  readonly verdictSelect: HTMLSelectElement;
  readonly noteInput: HTMLInputElement;
  readonly recordButton: HTMLButtonElement;
  readonly contextHeader: HTMLElement;
  readonly documentView: HTMLElement;
  readonly rounds: HTMLElement;
  readonly status: HTMLElement;

  constructor(root: HTMLElement, client: QAClient, log: SessionLog) {
    this.root = root;
    this.client = client;
    this.log = log;

    root.textContent = "";
    this.contextHeader = el("div", "qa-context");
    this.questionInput = el("input", "qa-question");
    this.questionInput.type = "text";
    this.scorerSelect = el("select", "qa-scorer");
    for (const scorer of ["baseline", "remote"]) {
      const option = document.createElement("option");
      option.value = scorer;
      option.textContent = scorer;
      this.scorerSelect.appendChild(option);
    }
    this.askButton = el("button", "qa-ask");
    this.askButton.textContent = "Ask";
    this.askButton.addEventListener("click", () => void this.ask());

    const form = el("div", "qa-form");
    form.append(this.questionInput, this.scorerSelect, this.askButton);

    this.status = el("div", "qa-status");
    this.documentView = el("div", "qa-document");
    this.rounds = el("ol", "qa-rounds");

    this.verdictSelect = el("select", "qa-verdict");
    for (const verdict of ["confirms", "contradicts", "unclear"]) {
      const option = document.createElement("option");
      option.value = verdict;
      option.textContent = verdict;
      this.verdictSelect.appendChild(option);
    }
    this.noteInput = el("input", "qa-note");
    this.noteInput.type = "text";
    this.noteInput.placeholder = "analyst note";
    this.recordButton = el("button", "qa-record");
    this.recordButton.textContent = "Record verdict";
    this.recordButton.disabled = true;
    this.recordButton.addEventListener("click", () => this.record());

    const verdictRow = el("div", "qa-verdict-row");
    verdictRow.append(this.verdictSelect, this.noteInput, this.recordButton);

    root.append(this.contextHeader, form, this.status, this.documentView, this.rounds, verdictRow);
  }

  /** Point the panel at one (topic, document) pair and pre-fill the question. */
  setContext(topic: TopicSummary, doc: DocumentDetail): void {
    this.topic = topic;
    this.doc = doc;
    this.lastResponse = null;
    this.recordButton.disabled = true;
    this.questionInput.value = formulateQuestion(
      topic.top_words.slice(0, 3).map((w) => w.term),
    );
    this.contextHeader.textContent =
      `${doc.id} · topic ${topic.topic} (${topic.label}) · SS ${formatScore(topic.ss)}`;
    this.documentView.textContent = doc.content;
    this.rounds.textContent = "";
    this.status.textContent = "";
  }

  /** POST the current question; render the round when the reply arrives. */
  async ask(): Promise<QAResponse | null> {
    const doc = this.doc;
    if (!doc) {
      this.status.textContent = "pick a document first";
      return null;
    }
    const question = this.questionInput.value.trim();
    if (!question) {
      this.status.textContent = "question is empty";
      return null;
    }
    const requestId = ++this.requestSeq;
    const scorer = this.scorerSelect.value as Scorer;
    this.status.textContent = `request ${requestId} pending…`;
    try {
      const response = await this.client.qa(doc.id, question, scorer);
      this.renderRound(requestId, response);
      return response;
    } catch (exc) {
      const message = exc instanceof Error ? exc.message : String(exc);
      this.status.textContent = `request ${requestId} failed: ${message}`;
      return null;
    }
  }

  private renderRound(requestId: number, response: QAResponse): void {
    const doc = this.doc;
    if (!doc || response.doc_id !== doc.id) {
      return; // context changed while the request was in flight
    }
    this.lastResponse = response;
    this.recordButton.disabled = false;
    this.status.textContent = "";

    // Highlight the latest arrival in the document view.
    const span = locateAnswer(doc.content, response.answer.text);
    renderHighlighted(this.documentView, doc.content, span);

    // Append to the arrival-ordered round log.
    const item = document.createElement("li");
    item.className = "qa-round";
    item.dataset.requestId = String(requestId);
    const flag = response.answer.low_confidence ? " · low confidence" : "";
    item.textContent =
      `#${requestId} [${response.provenance}] ${response.question} → ` +
      `"${response.answer.text}" (score ${response.answer.score.toFixed(3)}${flag})`;
    this.rounds.appendChild(item);
  }

  /** Record the analyst's verdict on the last answered round. */
  record(): void {
    const topic = this.topic;
    const doc = this.doc;
    const response = this.lastResponse;
    if (!topic || !doc || !response) {
      return;
    }
    this.log.add({
      topic: topic.topic,
      doc: doc.id,
      question: response.question,
      answer: { ...response.answer },
      ss: topic.ss,
      verdict: this.verdictSelect.value as Verdict,
      note: this.noteInput.value,
    });
    this.status.textContent = `recorded (${this.log.size} in session)`;
    this.noteInput.value = "";
  }
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  node.className = className;
  return node;
}
