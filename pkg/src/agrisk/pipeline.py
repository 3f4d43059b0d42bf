"""Batch orchestration: ingest -> preprocess -> vectorize -> fit ->
sentiment -> scoring, each stage persisting artifacts to a run directory.

Every stage reads its inputs from the previous stage's persisted artifacts
(never from in-process state), so re-running one stage reproduces the
full-run output byte for byte. manifest.json maps stages to artifact paths
and content hashes and is deterministic for a fixed config and corpus;
wall-clock timings live in a separate timings.json that is not part of the
reproducibility contract.
"""

from __future__ import annotations

import csv
import hashlib
import json
import os
import time
import warnings
from contextlib import contextmanager
from dataclasses import dataclass
from datetime import date
from pathlib import Path

import numpy as np

from .corpus import Corpus, filter_by_date, load_corpus, save_corpus
from .errors import PipelineStageError
from .preprocess import (
    PreprocessConfig,
    ProcessedDocument,
    preprocess_document,
    preprocess_text,
    segment_sentences,
)
from .qa import DEFAULT_LENGTH_PENALTY, DEFAULT_MAX_SPAN_LEN
from .scoring import TopicScore, score_report
from .sentiment import ValenceLexicon, score_document, score_sentences
from .topics import (
    RiskLexicon,
    TopicModel,
    build_seed_set,
    fit_guided_lda,
    fit_lda,
    vocab_content_hash,
)
from .vectorize import (
    DocTermMatrix,
    Vocabulary,
    build_vocabulary,
    tfidf_transform,
    to_bow,
    top_terms_by_tfidf,
)

DATA_DIR = Path(__file__).resolve().parent / "data"

STAGES = ("ingest", "preprocess", "vectorize", "fit", "sentiment", "scoring")

VARIANTS = ("plain", "tfidf", "guided")

ARTIFACTS = {
    "ingest": ("corpus.jsonl",),
    "preprocess": ("processed.jsonl",),
    "vectorize": ("vocabulary.tsv", "counts.tsv"),
    "fit": ("model.json",),
    "sentiment": ("doc_scores.json",),
    "scoring": ("report.json", "report.csv"),
}

LOCKFILE = ".lock"


@dataclass(frozen=True)
class PipelineConfig:
    """Everything a run needs; serializable so runs are reproducible from
    config + corpus alone."""

    corpus_path: str = str(DATA_DIR / "toy_corpus.csv")
    output_dir: str = "run"
    stopwords_path: str = str(DATA_DIR / "stopwords.txt")
    lemmas_path: str = str(DATA_DIR / "lemmas.tsv")
    sentiment_lexicon_path: str = str(DATA_DIR / "sentiment_lexicon.tsv")
    sentiment_rules_path: str = str(DATA_DIR / "sentiment_rules.json")
    risk_lexicon_path: str = str(DATA_DIR / "risk_lexicon.json")
    date_from: str | None = None
    date_to: str | None = None
    min_df: int = 15
    max_df_ratio: float = 0.90
    max_terms: int = 3000
    rank_by: str = "frequency"
    variant: str = "plain"
    topics: int = 6
    alpha: float | None = None
    beta: float = 0.01
    iterations: int = 1000
    burn_in: int = 200
    sample_every: int = 10
    rng_seed: int = 0
    labels: tuple[str, ...] | None = None
    boost: float = 0.5
    pi: float = 0.9
    topic_hints: dict[str, int] | None = None
    headline_top_n: int = 10
    combiner: str = "mean"
    pos_threshold: float = 0.05
    neg_threshold: float = -0.05
    ss_weighting: str = "theta"
    qa_max_span_len: int = DEFAULT_MAX_SPAN_LEN
    qa_length_penalty: float = DEFAULT_LENGTH_PENALTY
    qa_remote_url: str | None = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if self.topics < 1:
            raise ValueError(f"topics must be >= 1, got {self.topics}")
        if self.labels is not None and len(self.labels) != self.topics:
            raise ValueError(
                f"expected {self.topics} labels, got {len(self.labels)}"
            )

    @property
    def resolved_alpha(self) -> float:
        return self.alpha if self.alpha is not None else 50.0 / self.topics

    def to_dict(self, include_output_dir: bool = True) -> dict:
        payload = {
            "corpus_path": self.corpus_path,
            "output_dir": self.output_dir,
            "stopwords_path": self.stopwords_path,
            "lemmas_path": self.lemmas_path,
            "sentiment_lexicon_path": self.sentiment_lexicon_path,
            "sentiment_rules_path": self.sentiment_rules_path,
            "risk_lexicon_path": self.risk_lexicon_path,
            "date_from": self.date_from,
            "date_to": self.date_to,
            "min_df": self.min_df,
            "max_df_ratio": self.max_df_ratio,
            "max_terms": self.max_terms,
            "rank_by": self.rank_by,
            "variant": self.variant,
            "topics": self.topics,
            "alpha": self.resolved_alpha,
            "beta": self.beta,
            "iterations": self.iterations,
            "burn_in": self.burn_in,
            "sample_every": self.sample_every,
            "rng_seed": self.rng_seed,
            "labels": list(self.labels) if self.labels is not None else None,
            "boost": self.boost,
            "pi": self.pi,
            "topic_hints": dict(self.topic_hints) if self.topic_hints else None,
            "headline_top_n": self.headline_top_n,
            "combiner": self.combiner,
            "pos_threshold": self.pos_threshold,
            "neg_threshold": self.neg_threshold,
            "ss_weighting": self.ss_weighting,
            "qa_max_span_len": self.qa_max_span_len,
            "qa_length_penalty": self.qa_length_penalty,
            "qa_remote_url": self.qa_remote_url,
        }
        if not include_output_dir:
            del payload["output_dir"]
        return payload

    @classmethod
    def from_dict(cls, payload: dict) -> "PipelineConfig":
        known = dict(payload)
        labels = known.get("labels")
        if labels is not None:
            known["labels"] = tuple(labels)
        return cls(**known)

    @classmethod
    def from_file(cls, path: str | Path) -> "PipelineConfig":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def preprocess_config(self) -> PreprocessConfig:
        return PreprocessConfig(
            stopwords_path=self.stopwords_path, lemmas_path=self.lemmas_path
        )


@dataclass(frozen=True)
class RunArtifacts:
    """Handles onto a completed run's in-memory results and file layout."""

    run_dir: Path
    vocab: Vocabulary
    counts: DocTermMatrix
    model: TopicModel
    doc_scores: dict
    report: list[TopicScore]
    manifest: dict


def _sha256(path: Path) -> str:
    digest = hashlib.sha256()
    digest.update(path.read_bytes())
    return digest.hexdigest()


def _write_json(path: Path, payload) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, separators=(",", ":"), sort_keys=True)
        fh.write("\n")


def _read_json(path: Path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _load_processed(path: Path) -> list[ProcessedDocument]:
    docs = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            row = json.loads(line)
            docs.append(
                ProcessedDocument(
                    doc_id=row["doc_id"],
                    tokens=tuple(row["tokens"]),
                    sentences=tuple(row["sentences"]),
                )
            )
    return docs


def _require(run_dir: Path, stage: str, *names: str) -> list[Path]:
    paths = []
    for name in names:
        path = run_dir / name
        if not path.exists():
            raise FileNotFoundError(
                f"artifact {name!r} is missing from {run_dir}; "
                f"run the stages before {stage!r} first"
            )
        paths.append(path)
    return paths


def stage_ingest(config: PipelineConfig, run_dir: Path) -> dict[str, Path]:
    """Load, validate, optionally date-filter, and canonicalize the corpus."""
    corpus = load_corpus(config.corpus_path)
    if config.date_from or config.date_to:
        lo = date.fromisoformat(config.date_from) if config.date_from else date.min
        hi = date.fromisoformat(config.date_to) if config.date_to else date.max
        corpus = filter_by_date(corpus, lo, hi)
    if len(corpus) == 0:
        raise ValueError("ingest produced an empty corpus")
    out = run_dir / "corpus.jsonl"
    save_corpus(corpus, out)
    return {"corpus.jsonl": out}


def stage_preprocess(config: PipelineConfig, run_dir: Path) -> dict[str, Path]:
    """Tokenize, lemmatize, and segment every ingested document."""
    (corpus_path,) = _require(run_dir, "preprocess", "corpus.jsonl")
    corpus = load_corpus(corpus_path)
    pp = config.preprocess_config()
    out = run_dir / "processed.jsonl"
    with open(out, "w", encoding="utf-8") as fh:
        for doc in corpus:
            processed = preprocess_document(doc, pp)
            fh.write(
                json.dumps(
                    {
                        "doc_id": processed.doc_id,
                        "tokens": list(processed.tokens),
                        "sentences": list(processed.sentences),
                    },
                    separators=(",", ":"),
                )
                + "\n"
            )
    return {"processed.jsonl": out}


def stage_vectorize(config: PipelineConfig, run_dir: Path) -> dict[str, Path]:
    """Build the vocabulary and the count matrix (plus a TF-IDF export
    when that variant is selected)."""
    (processed_path,) = _require(run_dir, "vectorize", "processed.jsonl")
    processed = _load_processed(processed_path)
    vocab = build_vocabulary(
        processed,
        min_df=config.min_df,
        max_df_ratio=config.max_df_ratio,
        max_terms=config.max_terms,
        rank_by=config.rank_by,
    )
    counts = to_bow(processed, vocab)
    vocab_path = run_dir / "vocabulary.tsv"
    counts_path = run_dir / "counts.tsv"
    vocab.save(vocab_path)
    counts.save(counts_path, vocab)
    artifacts = {"vocabulary.tsv": vocab_path, "counts.tsv": counts_path}
    if config.variant == "tfidf":
        weighted = tfidf_transform(counts, vocab)
        weighted_path = run_dir / "tfidf.tsv"
        weighted.save(weighted_path, vocab)
        artifacts["tfidf.tsv"] = weighted_path
    return artifacts


def _headline_terms(
    corpus: Corpus, vocab: Vocabulary, config: PipelineConfig
) -> list[str]:
    """Top title terms by TF-IDF over the title corpus, main vocabulary."""
    pp = config.preprocess_config()
    titles = [
        ProcessedDocument(
            doc_id=doc.id,
            tokens=tuple(preprocess_text(doc.title, pp)),
            sentences=(doc.title,),
        )
        for doc in corpus
    ]
    rows = to_bow(titles, vocab)
    if sum(rows.token_totals) == 0:
        return []
    weighted = tfidf_transform(rows, vocab)
    ranked = top_terms_by_tfidf(weighted, vocab, config.headline_top_n)
    return [term for term, _ in ranked]


def stage_fit(config: PipelineConfig, run_dir: Path) -> dict[str, Path]:
    """Fit the configured LDA variant from the persisted matrix."""
    vocab_path, counts_path = _require(
        run_dir, "fit", "vocabulary.tsv", "counts.tsv"
    )
    vocab = Vocabulary.load(vocab_path)
    counts = DocTermMatrix.load(counts_path, vocab)
    vhash = vocab_content_hash(vocab_path)
    common = dict(
        K=config.topics,
        alpha=config.alpha,
        beta=config.beta,
        iterations=config.iterations,
        burn_in=config.burn_in,
        sample_every=config.sample_every,
        rng_seed=config.rng_seed,
        labels=config.labels,
        vocab_hash=vhash,
    )
    artifacts: dict[str, Path] = {}
    if config.variant == "plain":
        model = fit_lda(counts, vocab, **common)
    elif config.variant == "tfidf":
        model = fit_lda(tfidf_transform(counts, vocab), vocab, **common)
    else:
        (corpus_path,) = _require(run_dir, "fit", "corpus.jsonl")
        corpus = load_corpus(corpus_path)
        risk = RiskLexicon.load(config.risk_lexicon_path)
        if not config.topic_hints:
            raise ValueError("guided variant requires topic_hints in the config")
        headline = _headline_terms(corpus, vocab, config)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            seeds = build_seed_set(
                headline, risk, config.topics, config.topic_hints, vocab
            )
        seeds_path = run_dir / "seeds.json"
        _write_json(
            seeds_path,
            {
                "assignments": {
                    str(k): sorted(v) for k, v in seeds.assignments.items()
                },
                "provenance": seeds.provenance,
                "warnings": sorted(str(w.message) for w in caught),
                "boost": config.boost,
                "pi": config.pi,
            },
        )
        artifacts["seeds.json"] = seeds_path
        model = fit_guided_lda(
            counts, vocab, seeds, boost=config.boost, pi=config.pi, **common
        )
    model_path = run_dir / "model.json"
    model.save(model_path)
    artifacts["model.json"] = model_path
    return artifacts


def stage_sentiment(config: PipelineConfig, run_dir: Path) -> dict[str, Path]:
    """Score every document and its sentences with the valence engine."""
    (corpus_path,) = _require(run_dir, "sentiment", "corpus.jsonl")
    corpus = load_corpus(corpus_path)
    lexicon = ValenceLexicon.load(
        config.sentiment_lexicon_path, config.sentiment_rules_path
    )
    documents = {}
    for doc in corpus:
        overall = score_document(doc, lexicon, combiner=config.combiner)
        sentences = segment_sentences(doc.content)
        per_sentence = [
            {
                "text": text,
                "pos": s.pos,
                "neg": s.neg,
                "neu": s.neu,
                "compound": s.compound,
            }
            for text, s in zip(sentences, score_sentences(sentences, lexicon))
        ]
        documents[doc.id] = {
            "pos": overall.pos,
            "neg": overall.neg,
            "neu": overall.neu,
            "compound": overall.compound,
            "sentences": per_sentence,
        }
    out = run_dir / "doc_scores.json"
    _write_json(out, {"combiner": config.combiner, "documents": documents})
    return {"doc_scores.json": out}


def stage_scoring(config: PipelineConfig, run_dir: Path) -> dict[str, Path]:
    """Aggregate document compounds into the per-topic uncertainty report."""
    model_path, scores_path = _require(
        run_dir, "scoring", "model.json", "doc_scores.json"
    )
    model = TopicModel.load(model_path)
    doc_scores = _read_json(scores_path)["documents"]
    missing = [d for d in model.doc_ids if d not in doc_scores]
    if missing:
        raise ValueError(f"doc_scores.json lacks documents: {missing[:5]}")
    compounds = np.asarray(
        [doc_scores[d]["compound"] for d in model.doc_ids], dtype=np.float64
    )
    report = score_report(
        model,
        compounds,
        pos_threshold=config.pos_threshold,
        neg_threshold=config.neg_threshold,
        weighting=config.ss_weighting,
    )
    json_path = run_dir / "report.json"
    _write_json(
        json_path,
        {
            "pos_threshold": config.pos_threshold,
            "neg_threshold": config.neg_threshold,
            "weighting": config.ss_weighting,
            "topics": [row.to_dict() for row in report],
        },
    )
    csv_path = run_dir / "report.csv"
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["topic", "label", "ss", "n_docs", "class", "note"])
        for row in report:
            writer.writerow(
                [row.topic, row.label, repr(row.ss), row.n_docs,
                 row.classification, row.note]
            )
    return {"report.json": json_path, "report.csv": csv_path}


STAGE_FUNCS = {
    "ingest": stage_ingest,
    "preprocess": stage_preprocess,
    "vectorize": stage_vectorize,
    "fit": stage_fit,
    "sentiment": stage_sentiment,
    "scoring": stage_scoring,
}


def update_manifest(
    config: PipelineConfig, run_dir: Path, stage: str, artifacts: dict[str, Path]
) -> dict:
    """Record a completed stage's artifacts (relative path + sha256) in
    manifest.json; deterministic given config and artifact bytes."""
    manifest_path = run_dir / "manifest.json"
    manifest = _read_json(manifest_path) if manifest_path.exists() else {
        "stages": {},
        "config": config.to_dict(include_output_dir=False),
    }
    manifest["config"] = config.to_dict(include_output_dir=False)
    manifest["stages"][stage] = {
        name: {"path": path.name, "sha256": _sha256(path)}
        for name, path in artifacts.items()
    }
    _write_json(manifest_path, manifest)
    return manifest


def record_timing(run_dir: Path, stage: str, seconds: float) -> None:
    """Wall-time sidecar; intentionally outside the manifest so timing
    jitter cannot break byte-identical reproducibility."""
    path = run_dir / "timings.json"
    timings = _read_json(path) if path.exists() else {"stages": {}}
    timings["stages"][stage] = seconds
    _write_json(path, timings)


@contextmanager
def run_lock(run_dir: Path):
    """Exclusive advisory lock on a run directory (O_CREAT|O_EXCL file).

    A held lock raises PipelineStageError("lock", ...); a foreign lock file
    is never removed, only our own on exit.
    """
    run_dir = Path(run_dir)
    run_dir.mkdir(parents=True, exist_ok=True)
    lock = run_dir / LOCKFILE
    try:
        fd = os.open(lock, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
    except FileExistsError as exc:
        raise PipelineStageError(
            "lock", RuntimeError(f"another run holds {lock}")
        ) from exc
    os.write(fd, str(os.getpid()).encode())
    os.close(fd)
    try:
        yield
    finally:
        lock.unlink(missing_ok=True)


def run_stage(config: PipelineConfig, stage: str) -> dict[str, Path]:
    """Run one stage against the persisted run directory, updating the
    manifest and timing sidecar. Errors carry the stage name."""
    if stage not in STAGE_FUNCS:
        raise ValueError(f"unknown stage {stage!r}")
    run_dir = Path(config.output_dir)
    run_dir.mkdir(parents=True, exist_ok=True)
    started = time.perf_counter()
    try:
        artifacts = STAGE_FUNCS[stage](config, run_dir)
    except Exception as exc:
        raise PipelineStageError(stage, exc) from exc
    update_manifest(config, run_dir, stage, artifacts)
    record_timing(run_dir, stage, time.perf_counter() - started)
    return artifacts


def check_manifest(run_dir: Path) -> dict:
    """Validate that the run directory holds a complete manifest and all
    referenced artifacts exist; returns the manifest. Raises
    FileNotFoundError listing everything missing."""
    manifest_path = Path(run_dir) / "manifest.json"
    missing: list[str] = []
    if not manifest_path.exists():
        raise FileNotFoundError(f"manifest.json is missing from {run_dir}")
    manifest = _read_json(manifest_path)
    stages = manifest.get("stages", {})
    for stage in STAGES:
        if stage not in stages:
            missing.append(f"stage {stage!r} (not run)")
            continue
        for name, entry in stages[stage].items():
            if not (Path(run_dir) / entry["path"]).exists():
                missing.append(f"artifact {name!r} of stage {stage!r}")
    if missing:
        raise FileNotFoundError(
            f"run at {run_dir} is incomplete: " + "; ".join(missing)
        )
    return manifest


def run_pipeline(config: PipelineConfig) -> RunArtifacts:
    """Execute all stages under a run-directory lock.

    A stage failure aborts with the stage name and cause after removing
    every file this run created, so a broken run leaves no partial
    artifacts behind.
    """
    run_dir = Path(config.output_dir)
    created: list[Path] = []
    with run_lock(run_dir):
        for stage in STAGES:
            started = time.perf_counter()
            try:
                artifacts = STAGE_FUNCS[stage](config, run_dir)
            except Exception as exc:
                for path in created:
                    path.unlink(missing_ok=True)
                for name in ("manifest.json", "timings.json"):
                    (run_dir / name).unlink(missing_ok=True)
                raise PipelineStageError(stage, exc) from exc
            created.extend(artifacts.values())
            manifest = update_manifest(config, run_dir, stage, artifacts)
            record_timing(run_dir, stage, time.perf_counter() - started)

    vocab = Vocabulary.load(run_dir / "vocabulary.tsv")
    counts = DocTermMatrix.load(run_dir / "counts.tsv", vocab)
    model = TopicModel.load(run_dir / "model.json")
    doc_scores = _read_json(run_dir / "doc_scores.json")
    report_payload = _read_json(run_dir / "report.json")
    report = [TopicScore.from_dict(row) for row in report_payload["topics"]]
    return RunArtifacts(
        run_dir=run_dir,
        vocab=vocab,
        counts=counts,
        model=model,
        doc_scores=doc_scores,
        report=report,
        manifest=manifest,
    )
