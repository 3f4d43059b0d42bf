"""Command-line interface over the pipeline, QA, and service.

Subcommands: ingest, preprocess, fit, score, report, qa, serve, export.
Configuration resolves defaults < --config file < explicit flags, and
every invocation echoes the resolved config to stderr as one JSON line.

Exit codes:
  0   success
  2   configuration or usage error
  3   ingest stage failed
  4   preprocess stage failed
  5   vectorize stage failed
  6   fit stage failed
  7   sentiment stage failed
  8   scoring stage failed
  9   qa failed
  10  serve failed to start (missing/incomplete run artifacts)
  11  export failed
  12  run directory is locked by another pipeline run
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import PipelineStageError
from .pipeline import PipelineConfig, _read_json, check_manifest, run_lock, run_stage
from .qa import evaluate_uncertainty
from .topics import TopicModel, top_words

STAGE_EXIT_CODES = {
    "ingest": 3,
    "preprocess": 4,
    "vectorize": 5,
    "fit": 6,
    "sentiment": 7,
    "scoring": 8,
    "lock": 12,
}

# (flag, config field, type) triples shared by the stage subcommands.
_COMMON_FLAGS = (
    ("--corpus", "corpus_path", str),
    ("--output-dir", "output_dir", str),
)

_FLAGS = {
    "ingest": _COMMON_FLAGS
    + (("--date-from", "date_from", str), ("--date-to", "date_to", str)),
    "preprocess": _COMMON_FLAGS
    + (("--stopwords", "stopwords_path", str), ("--lemmas", "lemmas_path", str)),
    "fit": _COMMON_FLAGS
    + (
        ("--variant", "variant", str),
        ("--topics", "topics", int),
        ("--seed", "rng_seed", int),
        ("--min-df", "min_df", int),
        ("--max-df-ratio", "max_df_ratio", float),
        ("--max-terms", "max_terms", int),
        ("--rank-by", "rank_by", str),
        ("--alpha", "alpha", float),
        ("--beta", "beta", float),
        ("--iterations", "iterations", int),
        ("--burn-in", "burn_in", int),
        ("--sample-every", "sample_every", int),
        ("--boost", "boost", float),
        ("--pi", "pi", float),
        ("--headline-top-n", "headline_top_n", int),
    ),
    "score": _COMMON_FLAGS + (("--combiner", "combiner", str),),
    "report": _COMMON_FLAGS
    + (
        ("--pos-threshold", "pos_threshold", float),
        ("--neg-threshold", "neg_threshold", float),
        ("--ss-weighting", "ss_weighting", str),
    ),
    "qa": (
        ("--output-dir", "output_dir", str),
        ("--remote", "qa_remote_url", str),
        ("--max-span-len", "qa_max_span_len", int),
        ("--length-penalty", "qa_length_penalty", float),
    ),
    "serve": (("--output-dir", "output_dir", str),),
    "export": (("--output-dir", "output_dir", str),),
}

_SUBCOMMAND_STAGES = {
    "ingest": ("ingest",),
    "preprocess": ("preprocess",),
    "fit": ("vectorize", "fit"),
    "score": ("sentiment",),
    "report": ("scoring",),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agrisk",
        description="Topic, sentiment, and QA analytics over a news corpus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    helps = {
        "ingest": "validate the corpus and write its canonical form",
        "preprocess": "tokenize, lemmatize, and segment the ingested corpus",
        "fit": "build the vocabulary and fit the selected topic model",
        "score": "score document and sentence sentiment",
        "report": "aggregate sentiment into the per-topic uncertainty report",
        "qa": "ask a question of a topic's document and print the record",
        "serve": "serve a completed run over HTTP",
        "export": "bundle the run into one JSON file",
    }
    for name, flag_spec in _FLAGS.items():
        p = sub.add_parser(name, help=helps[name])
        p.add_argument("--config", type=str, default=None, help="JSON config file")
        for flag, dest, typ in flag_spec:
            p.add_argument(flag, dest=dest, type=typ, default=None)
        if name == "qa":
            p.add_argument("--topic", type=int, required=True)
            p.add_argument("--doc", type=str, default=None)
            p.add_argument("--question", type=str, default=None)
        if name == "serve":
            p.add_argument("--port", type=int, default=8000)
            p.add_argument("--host", type=str, default="127.0.0.1")
        if name == "export":
            p.add_argument("--out", type=str, default=None)
    return parser


def _resolve_config(args: argparse.Namespace) -> PipelineConfig:
    payload: dict = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            payload.update(json.load(fh))
    for _, dest, _ in _FLAGS[args.command]:
        value = getattr(args, dest, None)
        if value is not None:
            payload[dest] = value
    return PipelineConfig.from_dict(payload)


def _echo_config(config: PipelineConfig) -> None:
    line = json.dumps(config.to_dict(), sort_keys=True)
    print(f"resolved config: {line}", file=sys.stderr)


def _run_stages(config: PipelineConfig, stages: tuple[str, ...]) -> int:
    # Stage commands mutate the run directory, so they hold the same lock
    # a full pipeline run does (exit 12 when another run is active).
    with run_lock(Path(config.output_dir)):
        for stage in stages:
            artifacts = run_stage(config, stage)
            for name, path in sorted(artifacts.items()):
                print(f"{stage}: wrote {path}")
    return 0


def _cmd_qa(config: PipelineConfig, args: argparse.Namespace) -> int:
    run_dir = Path(config.output_dir)
    check_manifest(run_dir)
    from .corpus import load_corpus

    corpus = load_corpus(run_dir / "corpus.jsonl")
    model = TopicModel.load(run_dir / "model.json")
    report = _read_json(run_dir / "report.json")
    if not 0 <= args.topic < model.K:
        raise ValueError(f"topic {args.topic} outside 0..{model.K - 1}")
    record = evaluate_uncertainty(
        corpus,
        model,
        topic=args.topic,
        topic_ss=report["topics"][args.topic]["ss"],
        doc_id=args.doc,
        question=args.question,
        scorer="remote" if config.qa_remote_url else "baseline",
        remote_url=config.qa_remote_url,
        config=config.preprocess_config(),
    )
    print(json.dumps(record.to_dict(), indent=2))
    return 0


def _cmd_serve(config: PipelineConfig, args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(config.output_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def _cmd_export(config: PipelineConfig, args: argparse.Namespace) -> int:
    run_dir = Path(config.output_dir)
    manifest = check_manifest(run_dir)
    model = TopicModel.load(run_dir / "model.json")
    report = _read_json(run_dir / "report.json")
    doc_scores = _read_json(run_dir / "doc_scores.json")
    bundle = {
        "manifest": manifest,
        "report": report,
        "topics": [
            {
                "topic": k,
                "label": model.label_for(k),
                "top_words": [[t, p] for t, p in top_words(model, k, 10)],
            }
            for k in range(model.K)
        ],
        "documents": {
            doc_id: scores["compound"]
            for doc_id, scores in doc_scores["documents"].items()
        },
    }
    out = Path(args.out) if args.out else run_dir / "export.json"
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(bundle, fh, separators=(",", ":"), sort_keys=True)
        fh.write("\n")
    print(f"export: wrote {out}")
    return 0


def entrypoint(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _resolve_config(args)
    except (OSError, ValueError, TypeError, json.JSONDecodeError) as exc:
        print(f"error[config]: {exc}", file=sys.stderr)
        return 2
    _echo_config(config)
    try:
        if args.command in _SUBCOMMAND_STAGES:
            return _run_stages(config, _SUBCOMMAND_STAGES[args.command])
        if args.command == "qa":
            return _cmd_qa(config, args)
        if args.command == "serve":
            return _cmd_serve(config, args)
        return _cmd_export(config, args)
    except PipelineStageError as exc:
        print(f"error[{exc.stage}]: {exc}", file=sys.stderr)
        return STAGE_EXIT_CODES.get(exc.stage, 1)
    except FileNotFoundError as exc:
        code = {"qa": 9, "serve": 10, "export": 11}.get(args.command, 2)
        print(f"error[{args.command}]: {exc}", file=sys.stderr)
        return code
    except Exception as exc:
        code = {"qa": 9, "serve": 10, "export": 11}.get(args.command, 1)
        print(f"error[{args.command}]: {exc}", file=sys.stderr)
        return code


def main() -> None:  # pragma: no cover - thin wrapper
    sys.exit(entrypoint())


if __name__ == "__main__":  # pragma: no cover
    main()
