import { ApiError, RunClient } from "./api.js";
import { renderTopicBoard } from "./board.js";
import { renderDrilldown } from "./drilldown.js";
import { QAPanel } from "./qa_panel.js";
import { SessionLog } from "./session.js";
import type { DocumentDetail, TopicSummary } from "./types.js";

/**
 * Boot the workbench against a served run. The service base URL comes
 * from the ?api= query parameter and defaults to same-origin.
 */
export async function boot(root: HTMLElement): Promise<void> {
  const params = new URLSearchParams(window.location.search);
  const base = params.get("api") ?? "";
  const client = new RunClient(base);
  const log = new SessionLog();

  root.textContent = "";
  const statusBar = section(root, "status-bar");
  const boardRoot = section(root, "board-root");
  const drillRoot = section(root, "drill-root");
  const qaRoot = section(root, "qa-root");

  const exportButton = document.createElement("button");
  exportButton.className = "session-export";
  exportButton.textContent = "Export session";
  exportButton.addEventListener("click", () => log.download());
  statusBar.appendChild(exportButton);

  const message = document.createElement("span");
  message.className = "status-message";
  statusBar.appendChild(message);

  const report = (exc: unknown): void => {
    if (exc instanceof ApiError) {
      message.textContent = `service error ${exc.status} [${exc.stage}]: ${exc.message}`;
    } else {
      message.textContent = exc instanceof Error ? exc.message : String(exc);
    }
  };

  const panel = new QAPanel(qaRoot, client, log);
  let topics: TopicSummary[] = [];

  const openTopic = async (topic: TopicSummary): Promise<void> => {
    try {
      const listing = await client.topicDocuments(topic.topic);
      const details = new Map<string, DocumentDetail>();
      for (const row of listing.documents.slice(0, 12)) {
        details.set(row.doc_id, await client.document(row.doc_id));
      }
      renderDrilldown(drillRoot, listing, details, (docId) => {
        const doc = details.get(docId);
        if (doc) {
          panel.setContext(topic, doc);
        }
      });
    } catch (exc) {
      report(exc);
    }
  };

  try {
    topics = await client.topics();
    renderTopicBoard(boardRoot, topics, (id) => {
      const topic = topics.find((t) => t.topic === id);
      if (topic) {
        void openTopic(topic);
      }
    });
    message.textContent = `${topics.length} topics loaded from ${base || "same origin"}`;
  } catch (exc) {
    report(exc);
  }
}

function section(root: HTMLElement, className: string): HTMLElement {
  const node = document.createElement("section");
  node.className = className;
  root.appendChild(node);
  return node;
}

// Auto-boot in a real browser; tests import the pieces directly instead.
if (typeof document !== "undefined" && document.getElementById("app")) {
  const app = document.getElementById("app");
  if (app) {
    void boot(app);
  }
}
