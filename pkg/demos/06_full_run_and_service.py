# One call from corpus to report, and the HTTP view over the result.
#
# run_pipeline chains every stage (ingest, preprocess, vectorize, fit,
# sentiment, scoring), persists each stage's artifacts, and writes a
# manifest of relative paths and sha256 digests. Identical configuration
# gives a byte-identical manifest, which is the reproducibility contract
# the acceptance suite checks.

import dataclasses
import json
import tempfile
from pathlib import Path

from agrisk.pipeline import DATA_DIR, PipelineConfig, run_pipeline

config = PipelineConfig.from_file(DATA_DIR / "toy_config.json")
run_dir = Path(tempfile.mkdtemp()) / "toy-run"
config = dataclasses.replace(config, output_dir=str(run_dir),
                             iterations=400, burn_in=100, sample_every=5)

artifacts = run_pipeline(config)
print(f"run complete in {run_dir}")
print("artifacts:")
for path in sorted(p.name for p in run_dir.iterdir()):
    print(f"  {path}")

# The manifest names every artifact a stage produced, with digests. Wall
# times live in timings.json, outside the manifest, so reruns hash equal.
manifest = json.loads((run_dir / "manifest.json").read_text())
print("\nmanifest stages:", ", ".join(sorted(manifest["stages"])))
fit_entry = manifest["stages"]["fit"]["model.json"]
print(f"model.json sha256: {fit_entry['sha256'][:16]}...")

print("\nreport:")
for row in artifacts.report:
    print(f"  topic {row.topic} ({row.label}): SS {row.ss:+.4f} "
          f"-> {row.classification}, {row.n_docs} docs")

# The same run is reachable from the command line, stage by stage or all
# at once, with flags overriding a JSON config file:
#
#   agrisk ingest --config run.json
#   agrisk fit --variant guided --topics 6 --seed 0 --config run.json
#   agrisk report --config run.json
#   agrisk qa --doc doc05 --topic 0 --config run.json
#   agrisk export --config run.json
#
# (`python3 -m agrisk.cli ...` is equivalent.)

# The service module serves a completed run over HTTP. It snapshots the
# artifacts once at startup; every GET is pure over that snapshot.
from fastapi.testclient import TestClient

from agrisk.service import create_app

client = TestClient(create_app(run_dir))

topics = client.get("/topics").json()
print(f"\nGET /topics -> {len(topics)} topics; first entry:")
first = topics[0]
print(f"  label {first['label']!r}, SS {first['ss']:+.4f}, "
      f"class {first['class']}, {first['n_docs']} docs")
print(f"  top words: {', '.join(w['term'] for w in first['top_words'][:5])}")

drill = client.get("/topics/0/documents").json()["documents"]
print(f"\nGET /topics/0/documents -> {len(drill)} members, sorted by theta:")
for member in drill[:3]:
    print(f"  {member['doc_id']}  theta {member['theta']:.3f}  "
          f"compound {member['compound']:+.4f}")

# The analyst loop over HTTP: question from the topic's top words, asked
# of the cluster's strongest member.
from agrisk.qa import formulate_question

question = formulate_question([w["term"] for w in first["top_words"][:3]])
reply = client.post("/qa", json={"doc_id": drill[0]["doc_id"],
                                 "question": question,
                                 "scorer": "baseline"}).json()
print(f"\nPOST /qa {question!r}")
print(f"  -> {reply['answer']['text']!r} (score {reply['answer']['score']:.3f}, "
      f"dominant topic {reply['dominant_topic']})")

# In production the same app binds a port via `agrisk serve --output-dir
# <run> --port 8000`; `agrisk export` bundles manifest, report, topics,
# and documents into one JSON for offline analysis or the browser
# workbench in frontend/.
