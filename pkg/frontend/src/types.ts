// Wire types for the run service. These mirror the JSON the HTTP API
// returns; the UI never recomputes any of the numbers it displays.

export interface TopWord {
  term: string;
  phi: number;
}

export interface TopicSummary {
  topic: number;
  label: string;
  top_words: TopWord[];
  ss: number;
  class: string;
  n_docs: number;
}

export interface TopicDocument {
  doc_id: string;
  theta: number;
  compound: number;
}

export interface TopicDocuments {
  topic: number;
  documents: TopicDocument[];
}

export interface SentenceScore {
  text: string;
  pos: number;
  neg: number;
  neu: number;
  compound: number;
}

export interface DocumentDetail {
  id: string;
  title: string;
  content: string;
  published: string;
  source: string;
  pos: number;
  neg: number;
  neu: number;
  compound: number;
  sentences: SentenceScore[];
}

export interface TopicScoreRow {
  topic: number;
  label: string;
  ss: number;
  n_docs: number;
  class: string;
  note: string;
}

export interface ScoreReport {
  pos_threshold: number;
  neg_threshold: number;
  weighting: string;
  topics: TopicScoreRow[];
}

export interface QAAnswer {
  text: string;
  start: number;
  end: number;
  score: number;
  low_confidence: boolean;
}

export interface QAResponse {
  doc_id: string;
  question: string;
  scorer: string;
  provenance: string;
  dominant_topic: number | null;
  answer: QAAnswer;
}

export type Scorer = "baseline" | "remote";

export type Verdict = "confirms" | "contradicts" | "unclear";

/** One recorded QA validation, as written to the session export. */
export interface EvaluationEntry {
  topic: number;
  doc: string;
  question: string;
  answer: QAAnswer;
  ss: number;
  verdict: Verdict;
  note: string;
}
