"""HTTP service: endpoint payloads, error body shape, the QA compute
endpoint, and snapshot semantics over a completed run."""

import dataclasses
import json

import numpy as np
import pytest
from fastapi.testclient import TestClient

from agrisk.pipeline import run_pipeline
from agrisk.preprocess import PreprocessConfig
from agrisk.qa import QAQuery, answer_baseline
from agrisk.service import create_app

from conftest import toy_run_config


@pytest.fixture(scope="module")
def client(toy_run):
    _, artifacts = toy_run
    app = create_app(artifacts.run_dir)
    with TestClient(app) as client:
        yield client


def assert_error_body(response, code, stage):
    body = response.json()
    assert response.status_code == code
    assert set(body) == {"code", "stage", "message"}
    assert body["code"] == code
    assert body["stage"] == stage
    assert body["message"]


class TestTopics:
    def test_board_payload(self, client, toy_run):
        config, artifacts = toy_run
        topics = client.get("/topics").json()
        assert len(topics) == config.topics
        for k, entry in enumerate(topics):
            assert entry["topic"] == k
            assert entry["label"] == config.labels[k]
            assert len(entry["top_words"]) == 10
            phis = [w["phi"] for w in entry["top_words"]]
            assert phis == sorted(phis, reverse=True)
            assert entry["class"] in ("opportunity", "risk", "needs-context")
        by_topic = {r.topic: r for r in artifacts.report}
        for entry in topics:
            assert entry["ss"] == pytest.approx(by_topic[entry["topic"]].ss)
            assert entry["n_docs"] == by_topic[entry["topic"]].n_docs

    def test_drilldown_sorted_by_theta(self, client, toy_run):
        _, artifacts = toy_run
        topics = client.get("/topics").json()
        k = next(t["topic"] for t in topics if t["n_docs"] > 1)
        payload = client.get(f"/topics/{k}/documents").json()
        docs = payload["documents"]
        assert payload["topic"] == k
        assert len(docs) == topics[k]["n_docs"]
        thetas = [d["theta"] for d in docs]
        assert thetas == sorted(thetas, reverse=True)
        index = {doc_id: i for i, doc_id in enumerate(artifacts.model.doc_ids)}
        for entry in docs:
            d = index[entry["doc_id"]]
            assert int(np.argmax(artifacts.model.theta[d])) == k

    def test_unknown_topic_is_404_with_error_shape(self, client):
        assert_error_body(client.get("/topics/99/documents"), 404, "service")


class TestDocuments:
    def test_document_detail(self, client, toy_run):
        _, artifacts = toy_run
        doc_id = artifacts.model.doc_ids[0]
        payload = client.get(f"/documents/{doc_id}").json()
        assert payload["id"] == doc_id
        assert payload["title"]
        assert payload["content"]
        assert payload["published"]
        assert payload["source"]
        scores = artifacts.doc_scores["documents"][doc_id]
        assert payload["compound"] == pytest.approx(scores["compound"])
        assert payload["sentences"] == scores["sentences"]
        for sentence in payload["sentences"]:
            assert set(sentence) == {"text", "pos", "neg", "neu", "compound"}
            assert sentence["text"] in payload["content"]

    def test_unknown_document_is_404(self, client):
        assert_error_body(client.get("/documents/ghost"), 404, "service")


class TestScoresAndManifest:
    def test_scores_mirror_report_artifact(self, client, toy_run):
        _, artifacts = toy_run
        payload = client.get("/scores").json()
        on_disk = json.loads((artifacts.run_dir / "report.json").read_text())
        assert payload == on_disk
        assert payload["pos_threshold"] == 0.05
        assert len(payload["topics"]) == 6

    def test_manifest_endpoint(self, client, toy_run):
        _, artifacts = toy_run
        payload = client.get("/manifest").json()
        assert payload == artifacts.manifest

    def test_scores_are_a_startup_snapshot(self, tmp_path):
        """Disk edits after create_app never leak into responses."""
        run_dir = tmp_path / "snap"
        run_pipeline(toy_run_config(run_dir, iterations=40, burn_in=10))
        app = create_app(run_dir)
        with TestClient(app) as client:
            before = client.get("/scores").json()
            (run_dir / "report.json").write_text('{"tampered": true}')
            assert client.get("/scores").json() == before


class TestQAEndpoint:
    def test_baseline_answer_matches_library(self, client, toy_run):
        config, artifacts = toy_run
        doc_id = artifacts.model.doc_ids[2]
        question = "What is said about crop prices?"
        response = client.post("/qa", json={"doc_id": doc_id, "question": question})
        assert response.status_code == 200
        payload = response.json()
        corpus_doc = json.loads(
            next(
                line
                for line in (artifacts.run_dir / "corpus.jsonl").read_text().splitlines()
                if json.loads(line)["id"] == doc_id
            )
        )
        expected = answer_baseline(
            QAQuery(context=corpus_doc["content"], question=question),
            max_span_len=config.qa_max_span_len,
            length_penalty=config.qa_length_penalty,
            config=PreprocessConfig(
                stopwords_path=config.stopwords_path, lemmas_path=config.lemmas_path
            ),
        )
        assert payload["answer"] == expected.to_dict()
        assert payload["provenance"] == "baseline"
        assert payload["scorer"] == "baseline"
        d = artifacts.model.doc_ids.index(doc_id)
        assert payload["dominant_topic"] == int(np.argmax(artifacts.model.theta[d]))
        assert payload["answer"]["text"] in corpus_doc["content"]

    def test_unknown_document_404(self, client):
        response = client.post("/qa", json={"doc_id": "ghost", "question": "What?"})
        assert_error_body(response, 404, "qa")

    def test_empty_question_400(self, client, toy_run):
        _, artifacts = toy_run
        response = client.post(
            "/qa", json={"doc_id": artifacts.model.doc_ids[0], "question": "  "}
        )
        assert_error_body(response, 400, "qa")

    def test_bad_scorer_400(self, client, toy_run):
        _, artifacts = toy_run
        response = client.post(
            "/qa",
            json={"doc_id": artifacts.model.doc_ids[0], "question": "What?", "scorer": "oracle"},
        )
        assert_error_body(response, 400, "qa")

    def test_missing_field_422_with_error_shape(self, client):
        response = client.post("/qa", json={"question": "What?"})
        assert_error_body(response, 422, "service")

    def test_remote_unconfigured_400(self, client, toy_run):
        _, artifacts = toy_run
        response = client.post(
            "/qa",
            json={
                "doc_id": artifacts.model.doc_ids[0],
                "question": "What?",
                "scorer": "remote",
            },
        )
        assert_error_body(response, 400, "qa")


class TestQARemoteProxy:
    """The service proxies to a configured remote scorer and never falls
    back silently: transport trouble is 502, integrity trouble is 500."""

    @pytest.fixture()
    def remote_client(self, tmp_path, stub_server):
        run_dir = tmp_path / "remote"
        run_pipeline(
            toy_run_config(
                run_dir, iterations=40, burn_in=10, qa_remote_url=stub_server.url
            )
        )
        app = create_app(run_dir)
        with TestClient(app) as client:
            yield client, stub_server

    def test_remote_success(self, remote_client, toy_run):
        client, stub = remote_client
        doc_id = "doc00"
        detail = client.get(f"/documents/{doc_id}").json()
        first_word = detail["content"].split()[0].strip(",.;")
        stub.reply = (200, {"answer": first_word, "start": 0, "end": 1, "score": 3.0})
        response = client.post(
            "/qa", json={"doc_id": doc_id, "question": "What?", "scorer": "remote"}
        )
        assert response.status_code == 200
        payload = response.json()
        assert payload["provenance"] == f"remote:{stub.url}"
        assert payload["answer"]["text"] == first_word
        assert stub.last_request["context"] == detail["content"]

    def test_remote_transport_failure_is_502(self, remote_client):
        client, stub = remote_client
        stub.reply = (503, {"error": "down"})
        response = client.post(
            "/qa", json={"doc_id": "doc00", "question": "What?", "scorer": "remote"}
        )
        assert_error_body(response, 502, "qa")

    def test_remote_integrity_failure_is_500(self, remote_client):
        client, stub = remote_client
        stub.reply = (200, {"answer": "fabricated words", "start": 0, "end": 2, "score": 1.0})
        response = client.post(
            "/qa", json={"doc_id": "doc00", "question": "What?", "scorer": "remote"}
        )
        assert_error_body(response, 500, "qa")


class TestStartup:
    def test_incomplete_run_refused_with_missing_list(self, tmp_path):
        run_dir = tmp_path / "incomplete"
        config = toy_run_config(run_dir, iterations=40, burn_in=10)
        run_pipeline(config)
        (run_dir / "doc_scores.json").unlink()
        with pytest.raises(FileNotFoundError, match="doc_scores.json"):
            create_app(run_dir)

    def test_empty_dir_refused(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            create_app(tmp_path)
