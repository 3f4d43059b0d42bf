import type { EvaluationEntry } from "./types.js";

/**
 * The analyst's local evaluation log: every recorded QA round with the
 * verdict on whether the answer supports the topic's score. Export is a
 * plain JSON array so it diffs and archives cleanly.
 */
export class SessionLog {
  private entries: EvaluationEntry[] = [];

  add(entry: EvaluationEntry): void {
    this.entries.push({ ...entry });
  }

  list(): EvaluationEntry[] {
    return this.entries.map((e) => ({ ...e }));
  }

  get size(): number {
    return this.entries.length;
  }

  exportJson(): string {
    return JSON.stringify(this.entries, null, 2);
  }

  /** Trigger a browser download of the export (no-op outside a DOM). */
  download(filename = "qa-session.json"): void {
    const blob = new Blob([this.exportJson()], { type: "application/json" });
    const url = URL.createObjectURL(blob);
    const link = document.createElement("a");
    link.href = url;
    link.download = filename;
    link.click();
    URL.revokeObjectURL(url);
  }
}
