"""Command-line interface: stage chaining, config precedence, the stderr
config echo, exit codes, QA records, export bundles, and serve."""

import json
import socket
import subprocess
import sys
import time
from pathlib import Path

import pytest
import requests

from agrisk.cli import STAGE_EXIT_CODES, entrypoint

from conftest import TOY_CONFIG_PATH, toy_run_config

FAST = ["--iterations", "80", "--burn-in", "20", "--sample-every", "5"]


def run_cli(capsys, *argv):
    code = entrypoint(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def echoed_config(err: str) -> dict:
    line = next(l for l in err.splitlines() if l.startswith("resolved config: "))
    return json.loads(line[len("resolved config: "):])


def write_fast_config(tmp_path: Path, **overrides) -> Path:
    payload = toy_run_config(tmp_path / "run", iterations=80, burn_in=20, **overrides).to_dict()
    path = tmp_path / "config.json"
    path.write_text(json.dumps(payload))
    return path


class TestStageChain:
    def test_full_chain_exit_zero(self, tmp_path, capsys):
        config = write_fast_config(tmp_path)
        for command in ("ingest", "preprocess", "fit", "score", "report"):
            code, out, err = run_cli(capsys, command, "--config", str(config))
            assert code == 0, (command, err)
            assert "resolved config: " in err
            assert "wrote" in out
        run_dir = tmp_path / "run"
        for name in ("corpus.jsonl", "processed.jsonl", "vocabulary.tsv",
                     "counts.tsv", "model.json", "doc_scores.json",
                     "report.json", "report.csv", "manifest.json"):
            assert (run_dir / name).exists(), name

    def test_fit_reports_both_artifacts(self, tmp_path, capsys):
        config = write_fast_config(tmp_path)
        run_cli(capsys, "ingest", "--config", str(config))
        run_cli(capsys, "preprocess", "--config", str(config))
        code, out, _ = run_cli(capsys, "fit", "--config", str(config))
        assert code == 0
        assert "vocabulary.tsv" in out
        assert "model.json" in out

    def test_fit_variant_flag(self, tmp_path, capsys):
        # No labels in this config: --topics may then change K freely.
        config = write_fast_config(tmp_path, labels=None)
        run_cli(capsys, "ingest", "--config", str(config))
        run_cli(capsys, "preprocess", "--config", str(config))
        code, _, err = run_cli(
            capsys, "fit", "--config", str(config), "--variant", "tfidf",
            "--topics", "4", "--seed", "3",
        )
        assert code == 0, err
        model = json.loads((tmp_path / "run" / "model.json").read_text())
        assert model["variant"] == "tfidf"
        assert model["K"] == 4
        assert model["rng_seed"] == 3

    def test_guided_variant_via_config(self, tmp_path, capsys):
        config = write_fast_config(tmp_path, variant="guided")
        run_cli(capsys, "ingest", "--config", str(config))
        run_cli(capsys, "preprocess", "--config", str(config))
        code, out, _ = run_cli(capsys, "fit", "--config", str(config))
        assert code == 0
        assert (tmp_path / "run" / "seeds.json").exists()


class TestConfigResolution:
    def test_flag_overrides_config_file(self, tmp_path, capsys):
        config = write_fast_config(tmp_path)
        _, _, err = run_cli(
            capsys, "ingest", "--config", str(config), "--date-from", "2016-01-01"
        )
        resolved = echoed_config(err)
        assert resolved["date_from"] == "2016-01-01"
        assert resolved["min_df"] == 2  # from the file

    def test_config_file_overrides_defaults(self, tmp_path, capsys):
        config = write_fast_config(tmp_path)
        _, _, err = run_cli(capsys, "ingest", "--config", str(config))
        resolved = echoed_config(err)
        assert resolved["iterations"] == 80
        assert resolved["output_dir"] == str(tmp_path / "run")

    def test_echo_is_one_json_line_on_stderr(self, tmp_path, capsys):
        config = write_fast_config(tmp_path)
        _, out, err = run_cli(capsys, "ingest", "--config", str(config))
        echo_lines = [l for l in err.splitlines() if l.startswith("resolved config: ")]
        assert len(echo_lines) == 1
        assert "resolved config" not in out
        json.loads(echo_lines[0][len("resolved config: "):])

    def test_missing_config_file_is_exit_2(self, tmp_path, capsys):
        code, _, err = run_cli(capsys, "ingest", "--config", str(tmp_path / "nope.json"))
        assert code == 2
        assert "error[config]" in err

    def test_invalid_variant_is_exit_2(self, tmp_path, capsys):
        config = write_fast_config(tmp_path)
        code, _, err = run_cli(
            capsys, "fit", "--config", str(config), "--variant", "fancy"
        )
        assert code == 2
        assert "error[config]" in err


class TestExitCodes:
    def test_stage_codes_cover_all_stages(self):
        assert STAGE_EXIT_CODES == {
            "ingest": 3, "preprocess": 4, "vectorize": 5,
            "fit": 6, "sentiment": 7, "scoring": 8, "lock": 12,
        }

    def test_missing_upstream_fit_is_exit_5(self, tmp_path, capsys):
        config = write_fast_config(tmp_path)
        code, _, err = run_cli(capsys, "fit", "--config", str(config))
        assert code == 5
        assert "error[vectorize]" in err

    def test_missing_upstream_report_is_exit_8(self, tmp_path, capsys):
        config = write_fast_config(tmp_path)
        code, _, err = run_cli(capsys, "report", "--config", str(config))
        assert code == 8

    def test_empty_date_window_is_exit_3(self, tmp_path, capsys):
        config = write_fast_config(tmp_path)
        code, _, err = run_cli(
            capsys, "ingest", "--config", str(config),
            "--date-from", "1990-01-01", "--date-to", "1990-12-31",
        )
        assert code == 3
        assert "error[ingest]" in err

    def test_locked_run_dir_is_exit_12(self, tmp_path, capsys):
        config = write_fast_config(tmp_path)
        run_dir = tmp_path / "run"
        run_dir.mkdir()
        (run_dir / ".lock").write_text("777")
        code, _, err = run_cli(capsys, "ingest", "--config", str(config))
        assert code == 12
        assert "error[lock]" in err
        assert (run_dir / ".lock").exists()


class TestQACommand:
    @pytest.fixture()
    def completed(self, toy_run):
        config, artifacts = toy_run
        return config, artifacts.run_dir

    def test_prints_record_json(self, completed, capsys, toy_run):
        _, run_dir = completed
        _, artifacts = toy_run
        topic = next(r.topic for r in artifacts.report if r.n_docs > 0)
        code, out, _ = run_cli(
            capsys, "qa", "--output-dir", str(run_dir), "--topic", str(topic)
        )
        assert code == 0
        record = json.loads(out)
        assert record["topic"] == topic
        assert record["scorer_used"] == "baseline"
        assert record["provenance"] == "baseline"
        assert record["answer"]["text"]
        assert record["ss"] == pytest.approx(
            next(r.ss for r in artifacts.report if r.topic == topic)
        )

    def test_explicit_doc_and_question(self, completed, capsys, toy_run):
        _, run_dir = completed
        _, artifacts = toy_run
        topic = next(r.topic for r in artifacts.report if r.n_docs > 0)
        from agrisk.scoring import cluster_by_dominant_topic

        cluster = cluster_by_dominant_topic(artifacts.model.theta)[topic]
        doc_id = artifacts.model.doc_ids[cluster[0]]
        code, out, _ = run_cli(
            capsys, "qa", "--output-dir", str(run_dir), "--topic", str(topic),
            "--doc", doc_id, "--question", "What is said about the harvest?",
        )
        assert code == 0
        record = json.loads(out)
        assert record["doc_id"] == doc_id
        assert record["question"] == "What is said about the harvest?"

    def test_bad_topic_is_exit_9(self, completed, capsys):
        _, run_dir = completed
        code, _, err = run_cli(
            capsys, "qa", "--output-dir", str(run_dir), "--topic", "42"
        )
        assert code == 9
        assert "error[qa]" in err

    def test_incomplete_run_is_exit_9(self, tmp_path, capsys):
        code, _, err = run_cli(
            capsys, "qa", "--output-dir", str(tmp_path), "--topic", "0"
        )
        assert code == 9

    def test_unreachable_remote_falls_back(self, completed, capsys, toy_run):
        """--remote switches the scorer; a dead endpoint is persisted as an
        explicit baseline fallback, not an error."""
        _, run_dir = completed
        _, artifacts = toy_run
        topic = next(r.topic for r in artifacts.report if r.n_docs > 0)
        code, out, _ = run_cli(
            capsys, "qa", "--output-dir", str(run_dir), "--topic", str(topic),
            "--remote", "http://127.0.0.1:1/qa",
        )
        assert code == 0
        record = json.loads(out)
        assert record["scorer_requested"] == "remote"
        assert record["scorer_used"] == "baseline"
        assert record["provenance"].startswith("baseline-fallback")

    def test_remote_stub_used_when_reachable(self, completed, capsys, stub_server, toy_run):
        _, run_dir = completed
        _, artifacts = toy_run
        topic = next(r.topic for r in artifacts.report if r.n_docs > 0)
        from agrisk.scoring import cluster_by_dominant_topic

        cluster = cluster_by_dominant_topic(artifacts.model.theta)[topic]
        d = max(cluster, key=lambda i: (artifacts.model.theta[i, topic], -i))
        doc_id = artifacts.model.doc_ids[d]
        content = json.loads(
            next(
                line for line in (run_dir / "corpus.jsonl").read_text().splitlines()
                if json.loads(line)["id"] == doc_id
            )
        )["content"]
        token = content.split()[0].strip(",.;")
        stub_server.reply = (200, {"answer": token, "start": 0, "end": 1, "score": 5.0})
        code, out, _ = run_cli(
            capsys, "qa", "--output-dir", str(run_dir), "--topic", str(topic),
            "--remote", stub_server.url,
        )
        assert code == 0
        record = json.loads(out)
        assert record["scorer_used"] == "remote"
        assert record["provenance"] == f"remote:{stub_server.url}"
        assert record["answer"]["text"] == token


class TestExportCommand:
    def test_bundle_contents(self, toy_run, tmp_path, capsys):
        _, artifacts = toy_run
        out_path = tmp_path / "bundle.json"
        code, out, _ = run_cli(
            capsys, "export", "--output-dir", str(artifacts.run_dir),
            "--out", str(out_path),
        )
        assert code == 0
        bundle = json.loads(out_path.read_text())
        assert set(bundle) == {"manifest", "report", "topics", "documents"}
        assert bundle["manifest"] == artifacts.manifest
        assert len(bundle["topics"]) == 6
        for entry in bundle["topics"]:
            assert len(entry["top_words"]) == 10
        assert set(bundle["documents"]) == set(artifacts.model.doc_ids)

    def test_default_path_inside_run_dir(self, tmp_path, capsys):
        from agrisk.pipeline import run_pipeline

        run_dir = tmp_path / "run"
        run_pipeline(toy_run_config(run_dir, iterations=40, burn_in=10))
        code, out, _ = run_cli(capsys, "export", "--output-dir", str(run_dir))
        assert code == 0
        assert (run_dir / "export.json").exists()

    def test_incomplete_run_is_exit_11(self, tmp_path, capsys):
        code, _, err = run_cli(capsys, "export", "--output-dir", str(tmp_path))
        assert code == 11
        assert "error[export]" in err


class TestServeCommand:
    def test_incomplete_run_is_exit_10(self, tmp_path, capsys):
        code, _, err = run_cli(
            capsys, "serve", "--output-dir", str(tmp_path), "--port", "8099"
        )
        assert code == 10
        assert "error[serve]" in err

    def test_serves_completed_run_over_http(self, toy_run):
        """The installed console script starts a real server that answers
        /topics and /qa."""
        _, artifacts = toy_run
        with socket.socket() as sock:
            sock.bind(("127.0.0.1", 0))
            port = sock.getsockname()[1]
        base = f"http://127.0.0.1:{port}"
        with subprocess.Popen(
            [
                sys.executable, "-m", "agrisk.cli", "serve",
                "--output-dir", str(artifacts.run_dir), "--port", str(port),
            ],
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
        ) as proc:
            try:
                deadline = time.time() + 15
                topics = None
                while time.time() < deadline:
                    try:
                        topics = requests.get(f"{base}/topics", timeout=1).json()
                        break
                    except requests.RequestException:
                        if proc.poll() is not None:
                            _, stderr = proc.communicate()
                            raise AssertionError(
                                f"server exited early: {stderr.decode()}"
                            )
                        time.sleep(0.2)
                assert topics is not None, "server never came up"
                assert len(topics) == 6
                doc_id = artifacts.model.doc_ids[0]
                answer = requests.post(
                    f"{base}/qa",
                    json={"doc_id": doc_id, "question": "What is said about crops?"},
                    timeout=5,
                ).json()
                assert answer["doc_id"] == doc_id
                assert answer["answer"]["text"]
            finally:
                proc.terminate()
                try:
                    proc.communicate(timeout=10)
                except subprocess.TimeoutExpired:
                    proc.kill()
                    proc.communicate()
