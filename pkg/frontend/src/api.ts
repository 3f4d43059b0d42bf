import type {
  DocumentDetail,
  QAResponse,
  ScoreReport,
  Scorer,
  TopicDocuments,
  TopicSummary,
} from "./types.js";

/** An error response from the service; the body is always {code, stage, message}. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly stage: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

/** Typed client over the run service's HTTP API. */
export class RunClient {
  constructor(readonly baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await fetch(this.baseUrl + path, init);
    let body: unknown = null;
    try {
      body = await res.json();
    } catch {
      // non-JSON bodies fall through to the status check below
    }
    if (!res.ok) {
      const err = body as { stage?: string; message?: string } | null;
      throw new ApiError(
        res.status,
        err?.stage ?? "service",
        err?.message ?? `HTTP ${res.status}`,
      );
    }
    return body as T;
  }

  topics(): Promise<TopicSummary[]> {
    return this.request("/topics");
  }

  topicDocuments(k: number): Promise<TopicDocuments> {
    return this.request(`/topics/${k}/documents`);
  }

  document(id: string): Promise<DocumentDetail> {
    return this.request(`/documents/${encodeURIComponent(id)}`);
  }

  scores(): Promise<ScoreReport> {
    return this.request("/scores");
  }

  manifest(): Promise<unknown> {
    return this.request("/manifest");
  }

  qa(docId: string, question: string, scorer: Scorer): Promise<QAResponse> {
    return this.request("/qa", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ doc_id: docId, question, scorer }),
    });
  }
}
