"""Freeze service responses as workbench test fixtures.

Runs the bundled toy configuration end to end, serves the run in-process,
and captures the JSON the workbench unit tests replay: the topic board
payload, the score report, one topic's document listing, one document in
full, and one QA round. questions.json additionally pins question
wordings so the TypeScript question builder is checked against this
package's own phrasing.

Running the script twice produces byte-identical fixtures.
"""

import dataclasses
import json
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from fastapi.testclient import TestClient

from agrisk.pipeline import DATA_DIR, PipelineConfig, run_pipeline
from agrisk.qa import formulate_question
from agrisk.service import create_app

OUT = ROOT / "frontend" / "tests" / "fixtures"

QUESTION_CASES = [
    ["price", "market", "export"],
    ["seed", "disease"],
    ["seed"],
    ["call", "farm", "praise", "extra"],
    ["expect", "praise", "rural"],
]


def dump(name: str, payload) -> None:
    (OUT / name).write_text(json.dumps(payload, indent=2))
    print(f"wrote {name}")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    config = PipelineConfig.from_file(DATA_DIR / "toy_config.json")
    with tempfile.TemporaryDirectory() as tmp:
        run_dir = Path(tmp) / "toy-run"
        run_pipeline(dataclasses.replace(config, output_dir=str(run_dir)))
        client = TestClient(create_app(run_dir))

        topics = client.get("/topics").json()
        dump("topics.json", topics)
        dump("scores.json", client.get("/scores").json())

        listing = client.get("/topics/0/documents").json()
        dump("topic0_documents.json", listing)

        doc_id = listing["documents"][0]["doc_id"]
        dump("document.json", client.get(f"/documents/{doc_id}").json())

        question = formulate_question(
            [w["term"] for w in topics[0]["top_words"][:3]]
        )
        qa = client.post(
            "/qa",
            json={"doc_id": doc_id, "question": question, "scorer": "baseline"},
        ).json()
        dump("qa_response.json", qa)

    dump(
        "questions.json",
        [{"words": words, "question": formulate_question(words)}
         for words in QUESTION_CASES],
    )


if __name__ == "__main__":
    main()
