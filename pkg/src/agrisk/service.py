"""Read-mostly HTTP API over a completed run directory.

The app loads every artifact once at startup and serves an immutable
snapshot; POST /qa is the only compute endpoint and never touches disk.
Error bodies are {code, stage, message} at every status.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .corpus import load_corpus
from .errors import SpanIntegrityError, TransportError
from .pipeline import PipelineConfig, check_manifest, _read_json
from .qa import QAQuery, answer_baseline, answer_remote
from .scoring import cluster_by_dominant_topic
from .topics import TopicModel, top_words


class ServiceError(Exception):
    """An API-level failure that maps onto one HTTP response."""

    def __init__(self, code: int, stage: str, message: str):
        self.code = code
        self.stage = stage
        self.message = message
        super().__init__(message)


class QARequest(BaseModel):
    doc_id: str
    question: str
    scorer: str = "baseline"


def create_app(run_dir: str | Path) -> FastAPI:
    """Build the service over a completed run; raises FileNotFoundError
    listing missing artifacts when the manifest is incomplete."""
    run_dir = Path(run_dir)
    manifest = check_manifest(run_dir)
    config = PipelineConfig.from_dict(
        {**manifest["config"], "output_dir": str(run_dir)}
    )
    corpus = load_corpus(run_dir / "corpus.jsonl")
    model = TopicModel.load(run_dir / "model.json")
    doc_scores = _read_json(run_dir / "doc_scores.json")["documents"]
    report = _read_json(run_dir / "report.json")
    clusters = cluster_by_dominant_topic(model.theta)
    doc_index = {doc_id: i for i, doc_id in enumerate(model.doc_ids)}
    pp_config = config.preprocess_config()

    topics_payload = [
        {
            "topic": k,
            "label": model.label_for(k),
            "top_words": [
                {"term": term, "phi": phi} for term, phi in top_words(model, k, 10)
            ],
            "ss": report["topics"][k]["ss"],
            "class": report["topics"][k]["class"],
            "n_docs": report["topics"][k]["n_docs"],
        }
        for k in range(model.K)
    ]

    app = FastAPI(title="agrisk run service")
    # The workbench is a static page on another origin; the API is
    # read-mostly and local, so permissive CORS is fine here.
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ServiceError)
    async def service_error_handler(request: Request, exc: ServiceError):
        return JSONResponse(
            status_code=exc.code,
            content={"code": exc.code, "stage": exc.stage, "message": exc.message},
        )

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={"code": 422, "stage": "service", "message": str(exc.errors())},
        )

    @app.get("/topics")
    def get_topics():
        return topics_payload

    @app.get("/topics/{k}/documents")
    def get_topic_documents(k: int):
        if not 0 <= k < model.K:
            raise ServiceError(404, "service", f"topic {k} outside 0..{model.K - 1}")
        members = sorted(
            clusters[k], key=lambda d: (-model.theta[d, k], d)
        )
        return {
            "topic": k,
            "documents": [
                {
                    "doc_id": model.doc_ids[d],
                    "theta": float(model.theta[d, k]),
                    "compound": doc_scores[model.doc_ids[d]]["compound"],
                }
                for d in members
            ],
        }

    @app.get("/documents/{doc_id}")
    def get_document(doc_id: str):
        if doc_id not in corpus:
            raise ServiceError(404, "service", f"unknown document {doc_id!r}")
        doc = corpus.get(doc_id)
        scores = doc_scores[doc_id]
        return {
            "id": doc.id,
            "title": doc.title,
            "content": doc.content,
            "published": doc.published.isoformat(),
            "source": doc.source,
            "pos": scores["pos"],
            "neg": scores["neg"],
            "neu": scores["neu"],
            "compound": scores["compound"],
            "sentences": scores["sentences"],
        }

    @app.get("/scores")
    def get_scores():
        return report

    @app.get("/manifest")
    def get_manifest():
        return manifest

    @app.post("/qa")
    def post_qa(body: QARequest):
        if body.scorer not in ("baseline", "remote"):
            raise ServiceError(
                400, "qa", f"scorer must be baseline or remote, got {body.scorer!r}"
            )
        if body.doc_id not in corpus:
            raise ServiceError(404, "qa", f"unknown document {body.doc_id!r}")
        if not body.question.strip():
            raise ServiceError(400, "qa", "question is empty")
        doc = corpus.get(body.doc_id)
        query = QAQuery(context=doc.content, question=body.question)
        if body.scorer == "remote":
            url = config.qa_remote_url
            if not url:
                raise ServiceError(
                    400, "qa", "remote scorer requested but no remote URL configured"
                )
            try:
                answer = answer_remote(url, query)
            except TransportError as exc:
                raise ServiceError(502, "qa", str(exc)) from exc
            except SpanIntegrityError as exc:
                raise ServiceError(500, "qa", str(exc)) from exc
            provenance = f"remote:{url}"
        else:
            answer = answer_baseline(
                query,
                max_span_len=config.qa_max_span_len,
                length_penalty=config.qa_length_penalty,
                config=pp_config,
            )
            provenance = "baseline"
        dominant = None
        d = doc_index.get(body.doc_id)
        if d is not None:
            dominant = int(np.argmax(model.theta[d]))
        return {
            "doc_id": body.doc_id,
            "question": body.question,
            "scorer": body.scorer,
            "provenance": provenance,
            "dominant_topic": dominant,
            "answer": answer.to_dict(),
        }

    return app
