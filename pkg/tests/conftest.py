"""Shared fixtures: the bundled toy corpus taken through each pipeline stage.

Session scope keeps the expensive steps (preprocessing, Gibbs sampling) to a
single run; tests must treat these objects as read-only. Fixtures that need
mutation or isolation build their own copies from the paths.
"""

import dataclasses
import json
import sys
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

import pytest

from agrisk.corpus import load_corpus
from agrisk.pipeline import DATA_DIR, PipelineConfig, run_pipeline
from agrisk.preprocess import PreprocessConfig, preprocess_document
from agrisk.sentiment import ValenceLexicon, score_document
from agrisk.topics import fit_lda
from agrisk.vectorize import build_vocabulary, tfidf_transform, to_bow

TESTS_DIR = Path(__file__).resolve().parent

# Make the independent oracle module importable as plain `import oracles`.
if str(TESTS_DIR) not in sys.path:
    sys.path.insert(0, str(TESTS_DIR))

TOY_CORPUS_PATH = DATA_DIR / "toy_corpus.csv"
TOY_CONFIG_PATH = DATA_DIR / "toy_config.json"


@pytest.fixture(scope="session")
def toy_corpus():
    return load_corpus(TOY_CORPUS_PATH)


@pytest.fixture(scope="session")
def preprocess_config():
    return PreprocessConfig()


@pytest.fixture(scope="session")
def processed_docs(toy_corpus, preprocess_config):
    return [preprocess_document(doc, preprocess_config) for doc in toy_corpus]


@pytest.fixture(scope="session")
def toy_vocab(processed_docs):
    # Mirrors the bundled toy run configuration.
    return build_vocabulary(processed_docs, min_df=2, max_df_ratio=0.90, max_terms=500)


@pytest.fixture(scope="session")
def counts_matrix(processed_docs, toy_vocab):
    return to_bow(processed_docs, toy_vocab)


@pytest.fixture(scope="session")
def tfidf_matrix(counts_matrix, toy_vocab):
    return tfidf_transform(counts_matrix, toy_vocab)


@pytest.fixture(scope="session")
def fast_model(counts_matrix, toy_vocab):
    """Short-chain fit: enough sweeps for structure, cheap enough to share."""
    return fit_lda(
        counts_matrix,
        toy_vocab,
        K=6,
        iterations=120,
        burn_in=40,
        sample_every=5,
        rng_seed=0,
    )


@pytest.fixture(scope="session")
def valence_lexicon():
    return ValenceLexicon.load()


@pytest.fixture(scope="session")
def doc_compounds(toy_corpus, valence_lexicon):
    return {
        doc.id: score_document(doc, valence_lexicon).compound for doc in toy_corpus
    }


class StubQAServer:
    """Local HTTP endpoint whose reply is set per test."""

    def __init__(self):
        outer = self

        class Handler(BaseHTTPRequestHandler):
            def do_POST(self):
                length = int(self.headers.get("Content-Length", 0))
                outer.last_request = json.loads(self.rfile.read(length))
                status, body = outer.reply
                payload = body if isinstance(body, (bytes, str)) else json.dumps(body)
                if isinstance(payload, str):
                    payload = payload.encode("utf-8")
                self.send_response(status)
                self.send_header("Content-Type", "application/json")
                self.send_header("Content-Length", str(len(payload)))
                self.end_headers()
                self.wfile.write(payload)

            def log_message(self, *args):
                pass

        self.server = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
        self.reply = (200, {})
        self.last_request = None
        self.thread = threading.Thread(target=self.server.serve_forever, daemon=True)
        self.thread.start()

    @property
    def url(self):
        host, port = self.server.server_address
        return f"http://{host}:{port}/qa"

    def close(self):
        self.server.shutdown()
        self.server.server_close()


@pytest.fixture()
def stub_server():
    server = StubQAServer()
    yield server
    server.close()


def toy_run_config(output_dir: Path, **overrides) -> PipelineConfig:
    """Bundled toy configuration with a short sampling chain for tests."""
    base = PipelineConfig.from_file(TOY_CONFIG_PATH)
    fields = dict(
        output_dir=str(output_dir),
        iterations=150,
        burn_in=50,
        sample_every=5,
    )
    fields.update(overrides)
    return dataclasses.replace(base, **fields)


@pytest.fixture(scope="session")
def toy_run(tmp_path_factory):
    """One completed pipeline run shared by pipeline/service/export tests.

    Treat the run directory as read-only; tests that mutate artifacts must
    build their own run.
    """
    run_dir = tmp_path_factory.mktemp("toyrun") / "run"
    config = toy_run_config(run_dir)
    artifacts = run_pipeline(config)
    return config, artifacts


@pytest.fixture(scope="session")
def sentiment_goldens():
    with open(TESTS_DIR / "data" / "sentiment_goldens.json", encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def preprocess_goldens():
    with open(TESTS_DIR / "data" / "preprocess_goldens.json", encoding="utf-8") as fh:
        return json.load(fh)
