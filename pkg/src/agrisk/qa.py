"""Extractive question answering over document text.

The baseline scorer is a transparent lexical surrogate: every contiguous
token span (up to a length cap) is scored by the summed sentence-level
inverse document frequency of the question terms it covers, minus a
per-token length penalty. A remote client covers external neural QA
services behind the same answer type; it validates offsets locally and
never falls back to the baseline on its own.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass

import requests

from .errors import SpanIntegrityError, TransportError
from .preprocess import (
    PreprocessConfig,
    lemmatize,
    preprocess_text,
    segment_sentences,
)

_TOKEN = re.compile(r"\w+(?:['’-]\w+)*")

# Dropped from question terms: they steer a question, not its topic.
INTERROGATIVES = frozenset(
    {"what", "who", "whom", "whose", "which", "where", "when", "why", "how"}
)

DEFAULT_MAX_SPAN_LEN = 30
DEFAULT_LENGTH_PENALTY = 0.05
DEFAULT_TEMPLATE = "What is said about {w1}, {w2} and {w3}?"

_SLOT = re.compile(r"\{w(\d+)\}")


@dataclass(frozen=True)
class QAQuery:
    """A context paragraph and the question asked of it."""

    context: str
    question: str

    def __post_init__(self):
        if not self.context.strip():
            raise ValueError("QA context is empty")
        if not self.question.strip():
            raise ValueError("QA question is empty")


@dataclass(frozen=True)
class QAAnswer:
    """A contiguous answer span: raw text, token offsets, scorer score."""

    text: str
    start: int
    end: int
    score: float
    low_confidence: bool = False

    def __post_init__(self):
        if not 0 <= self.start < self.end:
            raise ValueError(f"bad span offsets [{self.start}, {self.end})")

    def to_dict(self) -> dict:
        return {
            "text": self.text,
            "start": self.start,
            "end": self.end,
            "score": self.score,
            "low_confidence": self.low_confidence,
        }


def _context_tokens(context: str) -> list[re.Match]:
    return list(_TOKEN.finditer(context))


def _question_terms(question: str, config: PreprocessConfig) -> set[str]:
    return set(preprocess_text(question, config)) - INTERROGATIVES


def _local_idf(terms: set[str], context: str, config: PreprocessConfig) -> dict[str, float]:
    """idf of each term over the context's sentences."""
    sentences = segment_sentences(context)
    sent_sets = [set(preprocess_text(s, config)) for s in sentences]
    n = len(sentences)
    idf = {}
    for term in terms:
        sf = sum(1 for ss in sent_sets if term in ss)
        idf[term] = math.log((1 + n) / (1 + sf)) + 1.0
    return idf


def answer_baseline(
    query: QAQuery,
    max_span_len: int = DEFAULT_MAX_SPAN_LEN,
    length_penalty: float = DEFAULT_LENGTH_PENALTY,
    config: PreprocessConfig | None = None,
) -> QAAnswer:
    """Argmax span under the lexical overlap scorer.

    score(span) = sum of idf over the distinct question terms the span
    covers, minus length_penalty per token. Ties go to the earliest start,
    then the shortest span. The idf sum iterates terms in sorted order so
    independent implementations reproduce the float exactly. A score <= 0
    (no informative overlap) is marked low_confidence.
    """
    if max_span_len < 1:
        raise ValueError(f"max_span_len must be >= 1, got {max_span_len}")
    config = config or PreprocessConfig()
    matches = _context_tokens(query.context)
    if not matches:
        raise ValueError("context has no tokens")
    q_terms = _question_terms(query.question, config)
    idf = _local_idf(q_terms, query.context, config)
    lemmatizer = config.lemmatizer
    lemmas = [lemmatize(m.group().lower(), lemmatizer) for m in matches]
    n = len(matches)

    best_score = -math.inf
    best_start = 0
    best_len = 1
    for start in range(n):
        covered: set[str] = set()
        limit = min(max_span_len, n - start)
        for length in range(1, limit + 1):
            term = lemmas[start + length - 1]
            if term in q_terms:
                covered.add(term)
            score = sum(idf[t] for t in sorted(covered)) - length_penalty * length
            # Strict improvement only: scan order encodes the tie rules
            # (earliest start first, then shortest span).
            if score > best_score:
                best_score = score
                best_start = start
                best_len = length
    end = best_start + best_len
    text = query.context[matches[best_start].start() : matches[end - 1].end()]
    return QAAnswer(
        text=text,
        start=best_start,
        end=end,
        score=best_score,
        low_confidence=best_score <= 0,
    )


def validate_span(context: str, text: str, start: int, end: int) -> None:
    """Check that [start, end) are token offsets whose raw substring is
    exactly text; raise SpanIntegrityError otherwise."""
    matches = _context_tokens(context)
    if not 0 <= start < end <= len(matches):
        raise SpanIntegrityError(
            start, end, f"offsets outside 0..{len(matches)} or empty"
        )
    expected = context[matches[start].start() : matches[end - 1].end()]
    if text != expected:
        raise SpanIntegrityError(
            start, end, f"answer text {text!r} is not the context span {expected!r}"
        )


def answer_remote(
    endpoint: str, query: QAQuery, timeout: float = 10.0
) -> QAAnswer:
    """POST the query to an external QA service and validate its answer.

    Wire contract: {"context", "question"} -> {"answer", "start", "end",
    "score"} with token offsets under this module's tokenizer. Transport
    and schema problems raise TransportError; offset/text mismatches raise
    SpanIntegrityError. No silent fallback ever happens here.
    """
    body = {"context": query.context, "question": query.question}
    try:
        response = requests.post(endpoint, json=body, timeout=timeout)
    except requests.RequestException as exc:
        raise TransportError(f"remote QA request failed: {exc}") from exc
    if response.status_code != 200:
        raise TransportError(
            f"remote QA returned HTTP {response.status_code}: {response.text[:200]}"
        )
    try:
        payload = response.json()
    except (json.JSONDecodeError, ValueError) as exc:
        raise TransportError(f"remote QA returned non-JSON body: {exc}") from exc
    missing = {"answer", "start", "end", "score"} - set(payload)
    if missing:
        raise TransportError(f"remote QA reply missing fields: {sorted(missing)}")
    try:
        text = str(payload["answer"])
        start = int(payload["start"])
        end = int(payload["end"])
        score = float(payload["score"])
    except (TypeError, ValueError) as exc:
        raise TransportError(f"remote QA reply fields malformed: {exc}") from exc
    validate_span(query.context, text, start, end)
    return QAAnswer(text=text, start=start, end=end, score=score)


def formulate_question(
    top_words: list[str], template: str = DEFAULT_TEMPLATE
) -> str:
    """Fill the template's {w1}..{wN} slots with topic top words.

    With at least as many words as slots, substitution is verbatim. With
    fewer, the whole slot region (first slot through last slot) collapses
    to a natural enumeration of the available words, so short word lists
    degrade gracefully ("about seed?" / "about seed and disease?").
    """
    words = [w for w in top_words if w]
    if not words:
        raise ValueError("at least one top word is required")
    slots = list(_SLOT.finditer(template))
    if not slots:
        raise ValueError("template has no {wN} slots")
    if len(words) >= len(slots):
        out = template
        for slot, word in zip(slots, words):
            out = out.replace(slot.group(0), word, 1)
        return out
    if len(words) == 1:
        phrase = words[0]
    else:
        phrase = ", ".join(words[:-1]) + " and " + words[-1]
    return template[: slots[0].start()] + phrase + template[slots[-1].end() :]


@dataclass(frozen=True)
class EvaluationRecord:
    """A QA validation of one uncertainty: the question asked, the answer
    found, and the topic's SS for side-by-side reading."""

    topic: int
    doc_id: str
    question: str
    answer: QAAnswer
    ss: float
    scorer_requested: str
    scorer_used: str
    provenance: str
    analyst_note: str = ""

    def to_dict(self) -> dict:
        return {
            "topic": self.topic,
            "doc_id": self.doc_id,
            "question": self.question,
            "answer": self.answer.to_dict(),
            "ss": self.ss,
            "scorer_requested": self.scorer_requested,
            "scorer_used": self.scorer_used,
            "provenance": self.provenance,
            "analyst_note": self.analyst_note,
        }


def evaluate_uncertainty(
    corpus,
    model,
    topic: int,
    topic_ss: float,
    doc_id: str | None = None,
    question: str | None = None,
    scorer: str = "baseline",
    remote_url: str | None = None,
    top_n: int = 3,
    analyst_note: str = "",
    config: PreprocessConfig | None = None,
    timeout: float = 10.0,
) -> EvaluationRecord:
    """Ask a topic-derived question of a cluster document and record it.

    Picks the highest-theta document of the topic's cluster when doc_id is
    unspecified (ties take the earlier document). scorer="remote" requires
    remote_url; if the remote call fails in transport, the record is
    completed with the baseline and the provenance says so explicitly.
    Integrity errors (a malformed remote answer) always propagate.
    """
    from .scoring import cluster_by_dominant_topic
    from .topics import top_words as model_top_words

    if scorer not in ("baseline", "remote"):
        raise ValueError(f"scorer must be baseline or remote, got {scorer!r}")
    if scorer == "remote" and not remote_url:
        raise ValueError("remote scorer requires remote_url")

    clusters = cluster_by_dominant_topic(model.theta)
    if not 0 <= topic < model.K:
        raise ValueError(f"topic {topic} outside 0..{model.K - 1}")
    cluster = clusters[topic]
    if doc_id is None:
        if not cluster:
            raise ValueError(f"topic {topic} has no documents")
        d = max(cluster, key=lambda i: (model.theta[i, topic], -i))
        doc_id = model.doc_ids[d]
    else:
        if doc_id not in model.doc_ids:
            raise ValueError(f"document {doc_id!r} not in the model")
        if model.doc_ids.index(doc_id) not in cluster:
            raise ValueError(f"document {doc_id!r} is not in topic {topic}'s cluster")

    doc = corpus.get(doc_id)
    if question is None:
        words = [w for w, _ in model_top_words(model, topic, top_n)]
        question = formulate_question(words)
    query = QAQuery(context=doc.content, question=question)

    scorer_used = scorer
    provenance = scorer
    if scorer == "remote":
        try:
            answer = answer_remote(remote_url, query, timeout=timeout)
            provenance = f"remote:{remote_url}"
        except TransportError as exc:
            answer = answer_baseline(query, config=config)
            scorer_used = "baseline"
            provenance = f"baseline-fallback (remote unavailable: {exc})"
    else:
        answer = answer_baseline(query, config=config)

    return EvaluationRecord(
        topic=topic,
        doc_id=doc_id,
        question=question,
        answer=answer,
        ss=topic_ss,
        scorer_requested=scorer,
        scorer_used=scorer_used,
        provenance=provenance,
        analyst_note=analyst_note,
    )
