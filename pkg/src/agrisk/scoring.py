"""Aggregate document sentiment into per-topic uncertainty scores.

Documents cluster by dominant topic; each topic's sentiment score (SS) is
the theta-weighted mean of its cluster's document compounds, and a
threshold rule maps SS to opportunity / risk / needs-context.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .topics import TopicModel, dominant_topic

OPPORTUNITY = "opportunity"
RISK = "risk"
NEEDS_CONTEXT = "needs-context"

WEIGHTINGS = ("theta", "unweighted")


@dataclass(frozen=True)
class TopicScore:
    """One uncertainty: topic index, analyst label, SS, cluster size,
    threshold class. note marks degenerate rows (e.g. empty clusters)."""

    topic: int
    label: str
    ss: float
    n_docs: int
    classification: str
    note: str = ""

    def __post_init__(self):
        if not -1.0 <= self.ss <= 1.0:
            raise ValueError(f"SS {self.ss} outside [-1, 1]")
        if self.n_docs < 0:
            raise ValueError(f"n_docs {self.n_docs} negative")
        if self.classification not in (OPPORTUNITY, RISK, NEEDS_CONTEXT):
            raise ValueError(f"unknown class {self.classification!r}")

    def to_dict(self) -> dict:
        # Serialized key is "class"; that name is reserved in Python.
        payload = {
            "topic": self.topic,
            "label": self.label,
            "ss": self.ss,
            "n_docs": self.n_docs,
            "class": self.classification,
        }
        if self.note:
            payload["note"] = self.note
        return payload

    @classmethod
    def from_dict(cls, payload: dict) -> "TopicScore":
        return cls(
            topic=payload["topic"],
            label=payload["label"],
            ss=payload["ss"],
            n_docs=payload["n_docs"],
            classification=payload["class"],
            note=payload.get("note", ""),
        )


def cluster_by_dominant_topic(theta: np.ndarray) -> list[list[int]]:
    """Partition document indices 0..D-1 by dominant topic (ties take the
    lowest topic index); clusters may be empty."""
    D, K = theta.shape
    clusters: list[list[int]] = [[] for _ in range(K)]
    for d in range(D):
        k, _ = dominant_topic(theta[d])
        clusters[k].append(d)
    return clusters


def topic_sentiment_score(
    cluster: list[int],
    compounds: np.ndarray,
    theta: np.ndarray,
    k: int,
    weighting: str = "theta",
) -> float:
    """SS of topic k: theta-weighted mean of cluster document compounds.

    weighting="unweighted" averages the compounds directly. An empty
    cluster scores 0 by convention (callers flag it via n_docs = 0).
    """
    if weighting not in WEIGHTINGS:
        raise ValueError(f"weighting must be one of {WEIGHTINGS}, got {weighting!r}")
    if not cluster:
        return 0.0
    cs = np.asarray([compounds[d] for d in cluster], dtype=np.float64)
    if weighting == "unweighted":
        return float(cs.mean())
    w = np.asarray([theta[d, k] for d in cluster], dtype=np.float64)
    return float((w * cs).sum() / w.sum())


def classify_uncertainty(
    ss: float, pos_threshold: float = 0.05, neg_threshold: float = -0.05
) -> str:
    """opportunity above pos_threshold, risk below neg_threshold
    (both inclusive), needs-context between."""
    if not -1.0 <= ss <= 1.0:
        raise ValueError(f"SS {ss} outside [-1, 1]")
    if pos_threshold <= neg_threshold:
        raise ValueError("pos_threshold must exceed neg_threshold")
    if ss >= pos_threshold:
        return OPPORTUNITY
    if ss <= neg_threshold:
        return RISK
    return NEEDS_CONTEXT


def score_report(
    model: TopicModel,
    compounds: np.ndarray,
    pos_threshold: float = 0.05,
    neg_threshold: float = -0.05,
    weighting: str = "theta",
) -> list[TopicScore]:
    """One TopicScore per topic, ordered by topic index."""
    if len(compounds) != model.theta.shape[0]:
        raise ValueError(
            f"{len(compounds)} compounds for {model.theta.shape[0]} documents"
        )
    clusters = cluster_by_dominant_topic(model.theta)
    report = []
    for k in range(model.K):
        ss = topic_sentiment_score(
            clusters[k], compounds, model.theta, k, weighting=weighting
        )
        report.append(
            TopicScore(
                topic=k,
                label=model.label_for(k),
                ss=ss,
                n_docs=len(clusters[k]),
                classification=classify_uncertainty(ss, pos_threshold, neg_threshold),
                note="" if clusters[k] else "empty cluster",
            )
        )
    return report
