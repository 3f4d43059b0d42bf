"""LDA topic models fit by collapsed Gibbs sampling.

Three variants share one sampler:

- plain: one sampling site per token, unit weight
- tfidf: one site per nonzero (doc, term) cell, carrying its TF-IDF weight
  rescaled so each document's total weight equals its token count
- guided: plain or tfidf counts plus seed-biased initialization and an
  additive per-(topic, term) prior boost

The sweep loop is compiled with numba when available. The pure-Python
fallback consumes the identical MT19937 stream (numba's np.random.random
matches the legacy numpy RandomState), so both paths produce bit-identical
models for the same seed.
"""

from __future__ import annotations

import hashlib
import json
import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import EmptySeedSetError
from .vectorize import DocTermMatrix, Vocabulary

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


DEFAULT_ITERATIONS = 1000
DEFAULT_BURN_IN = 200
DEFAULT_SAMPLE_EVERY = 10
DEFAULT_BETA = 0.01


@dataclass(frozen=True)
class GibbsCounts:
    """Count tables of a collapsed Gibbs state (document-topic,
    topic-term, topic totals)."""

    n_dk: np.ndarray
    n_kw: np.ndarray
    n_k: np.ndarray


def conditional_distribution(
    counts: GibbsCounts,
    d: int,
    w: int,
    alpha: float,
    beta: float,
    boost_kw: np.ndarray | None = None,
) -> np.ndarray:
    """Collapsed Gibbs conditional p(topic | rest) for one token.

    p(k) proportional to (n_dk + alpha) * (n_kw + beta + boost_kw)
    / (n_k + V*beta + sum_w boost_kw). Counts must already exclude the
    token being resampled.
    """
    K, V = counts.n_kw.shape
    if boost_kw is None:
        boost_col = np.zeros(K)
        boost_tot = np.zeros(K)
    else:
        boost_col = boost_kw[:, w]
        boost_tot = boost_kw.sum(axis=1)
    num = (counts.n_dk[d] + alpha) * (counts.n_kw[:, w] + beta + boost_col)
    den = counts.n_k + V * beta + boost_tot
    p = num / den
    return p / p.sum()


@dataclass(frozen=True)
class RiskLexicon:
    """Named term lists grouping agricultural risk vocabulary by category."""

    categories: dict[str, tuple[str, ...]]

    def __post_init__(self):
        if not self.categories:
            raise ValueError("risk lexicon has no categories")
        for name, terms in self.categories.items():
            if not terms:
                raise ValueError(f"risk lexicon category {name!r} is empty")
            for term in terms:
                if term != term.lower():
                    raise ValueError(
                        f"risk lexicon term {term!r} in {name!r} is not lowercase"
                    )

    @classmethod
    def load(cls, path: str | Path) -> "RiskLexicon":
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        return cls(categories={k: tuple(v) for k, v in raw.items()})


@dataclass(frozen=True)
class SeedSet:
    """Seed terms per topic with per-term provenance.

    provenance values: "headline-tfidf" for terms mined from titles,
    "risk-lexicon" for terms taken from the risk lexicon.
    """

    assignments: dict[int, frozenset[str]]
    provenance: dict[str, str]

    def __post_init__(self):
        if not any(self.assignments.values()):
            raise EmptySeedSetError("seed set has no terms")


def build_seed_set(
    headline_terms: list[str],
    risk_lexicon: RiskLexicon,
    K: int,
    topic_hints: dict[str, int],
    vocab: Vocabulary,
) -> SeedSet:
    """Assemble per-topic seed terms from headlines and the risk lexicon.

    topic_hints maps a risk lexicon category (or the pseudo-category
    "headline" for the mined headline terms) to a topic index. Terms
    missing from the vocabulary are dropped with a warning, never silently.
    """
    if not topic_hints:
        raise EmptySeedSetError("no topic hints supplied")
    assignments: dict[int, set[str]] = {k: set() for k in range(K)}
    provenance: dict[str, str] = {}
    for category, topic in topic_hints.items():
        if not 0 <= topic < K:
            raise ValueError(
                f"topic hint {category!r} -> {topic} outside 0..{K - 1}"
            )
        if category == "headline":
            terms = list(headline_terms)
            source = "headline-tfidf"
        else:
            if category not in risk_lexicon.categories:
                raise ValueError(f"unknown risk lexicon category {category!r}")
            terms = list(risk_lexicon.categories[category])
            source = "risk-lexicon"
        for term in terms:
            if term not in vocab:
                warnings.warn(
                    f"seed term {term!r} ({source}, topic {topic}) is not in "
                    f"the vocabulary; dropped",
                    stacklevel=2,
                )
                continue
            assignments[topic].add(term)
            provenance.setdefault(term, source)
    return SeedSet(
        assignments={k: frozenset(v) for k, v in assignments.items()},
        provenance=provenance,
    )


@dataclass(frozen=True)
class TopicModel:
    """Fitted topic model: row-stochastic phi (K x V) and theta (D x K)."""

    phi: np.ndarray
    theta: np.ndarray
    terms: tuple[str, ...]
    doc_ids: tuple[str, ...]
    K: int
    alpha: float
    beta: float
    variant: str
    rng_seed: int
    iterations: int
    burn_in: int
    sample_every: int
    vocab_hash: str
    beta_boost: np.ndarray | None = None
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.labels is not None and len(self.labels) != self.K:
            raise ValueError(
                f"expected {self.K} labels, got {len(self.labels)}"
            )

    def label_for(self, k: int) -> str:
        if self.labels is not None:
            return self.labels[k]
        return f"Topic {k}"

    def save(self, path: str | Path) -> None:
        """Write the model as JSON with 9-significant-digit matrices."""

        def round9(arr: np.ndarray) -> list:
            return [[float(f"{x:.9g}") for x in row] for row in arr]

        payload = {
            "K": self.K,
            "alpha": self.alpha,
            "beta": self.beta,
            "variant": self.variant,
            "rng_seed": self.rng_seed,
            "iterations": self.iterations,
            "burn_in": self.burn_in,
            "sample_every": self.sample_every,
            "vocab_hash": self.vocab_hash,
            "terms": list(self.terms),
            "doc_ids": list(self.doc_ids),
            "labels": list(self.labels) if self.labels is not None else None,
            "phi": round9(self.phi),
            "theta": round9(self.theta),
            "beta_boost": round9(self.beta_boost)
            if self.beta_boost is not None
            else None,
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, separators=(",", ":"), sort_keys=True)
            fh.write("\n")

    @classmethod
    def load(cls, path: str | Path) -> "TopicModel":
        """Reload a saved model; rows are renormalized after rounding."""
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
        phi = np.array(payload["phi"], dtype=np.float64)
        theta = np.array(payload["theta"], dtype=np.float64)
        phi /= phi.sum(axis=1, keepdims=True)
        theta /= theta.sum(axis=1, keepdims=True)
        boost = payload.get("beta_boost")
        labels = payload.get("labels")
        return cls(
            phi=phi,
            theta=theta,
            terms=tuple(payload["terms"]),
            doc_ids=tuple(payload["doc_ids"]),
            K=payload["K"],
            alpha=payload["alpha"],
            beta=payload["beta"],
            variant=payload["variant"],
            rng_seed=payload["rng_seed"],
            iterations=payload["iterations"],
            burn_in=payload["burn_in"],
            sample_every=payload["sample_every"],
            vocab_hash=payload["vocab_hash"],
            beta_boost=np.array(boost, dtype=np.float64)
            if boost is not None
            else None,
            labels=tuple(labels) if labels is not None else None,
        )


def _sampling_sites(matrix: DocTermMatrix):
    """Flatten the matrix into per-site arrays for the sampler.

    counts kind: one site per token (unit weight). tfidf kind: one site per
    nonzero cell, weight rescaled so each document's site weights sum to
    its token count.
    """
    doc_idx: list[int] = []
    word_idx: list[int] = []
    weights: list[float] = []
    for d, row in enumerate(matrix.rows):
        if matrix.kind == "counts":
            for term_id, count in row:
                for _ in range(int(count)):
                    doc_idx.append(d)
                    word_idx.append(term_id)
                    weights.append(1.0)
        else:
            row_total = sum(w for _, w in row)
            if row_total <= 0:
                continue
            scale = matrix.token_totals[d] / row_total
            for term_id, weight in row:
                doc_idx.append(d)
                word_idx.append(term_id)
                weights.append(weight * scale)
    return (
        np.asarray(doc_idx, dtype=np.int64),
        np.asarray(word_idx, dtype=np.int64),
        np.asarray(weights, dtype=np.float64),
    )


def _gibbs_loop_python(
    doc_idx,
    word_idx,
    weights,
    D,
    V,
    K,
    alpha,
    beta,
    boost_kw,
    boost_k,
    seeded_topic,
    pi,
    plain_init,
    iterations,
    burn_in,
    sample_every,
    seed,
    audit_every,
):
    """Reference sweep loop; numba kernel mirrors this draw-for-draw."""
    rng = np.random.RandomState(seed)
    N = doc_idx.shape[0]
    n_dk = np.zeros((D, K))
    n_kw = np.zeros((K, V))
    n_k = np.zeros(K)
    z = np.empty(N, dtype=np.int64)

    for i in range(N):
        u = rng.random_sample()
        st = seeded_topic[word_idx[i]]
        if plain_init or st < 0:
            k = min(int(u * K), K - 1)
        elif u < pi:
            k = st
        else:
            r = (u - pi) / (1.0 - pi)
            k = min(int(r * (K - 1)), K - 2)
            if k >= st:
                k += 1
        z[i] = k
        w = weights[i]
        n_dk[doc_idx[i], k] += w
        n_kw[k, word_idx[i]] += w
        n_k[k] += w

    total_weight = weights.sum()
    doc_totals = np.zeros(D)
    for i in range(N):
        doc_totals[doc_idx[i]] += weights[i]

    acc_dk = np.zeros((D, K))
    acc_kw = np.zeros((K, V))
    n_samples = 0
    max_dev = 0.0
    probs = np.empty(K)
    vbeta = V * beta

    for it in range(1, iterations + 1):
        for i in range(N):
            d = doc_idx[i]
            wd = word_idx[i]
            w = weights[i]
            k = z[i]
            n_dk[d, k] -= w
            n_kw[k, wd] -= w
            n_k[k] -= w
            total = 0.0
            for kk in range(K):
                p = (
                    (n_dk[d, kk] + alpha)
                    * (n_kw[kk, wd] + beta + boost_kw[kk, wd])
                    / (n_k[kk] + vbeta + boost_k[kk])
                )
                probs[kk] = p
                total += p
            u = rng.random_sample() * total
            acc = 0.0
            k_new = K - 1
            for kk in range(K):
                acc += probs[kk]
                if u < acc:
                    k_new = kk
                    break
            z[i] = k_new
            n_dk[d, k_new] += w
            n_kw[k_new, wd] += w
            n_k[k_new] += w
        if it > burn_in and (it - burn_in) % sample_every == 0:
            acc_dk += n_dk
            acc_kw += n_kw
            n_samples += 1
        if audit_every > 0 and it % audit_every == 0:
            dev = abs(n_k.sum() - total_weight)
            for d in range(D):
                dev = max(dev, abs(n_dk[d].sum() - doc_totals[d]))
            for kk in range(K):
                dev = max(dev, abs(n_kw[kk].sum() - n_k[kk]))
            max_dev = max(max_dev, dev)
    return acc_dk, acc_kw, n_dk, n_kw, n_samples, max_dev


@njit(cache=True)
def _gibbs_loop_numba(
    doc_idx,
    word_idx,
    weights,
    D,
    V,
    K,
    alpha,
    beta,
    boost_kw,
    boost_k,
    seeded_topic,
    pi,
    plain_init,
    iterations,
    burn_in,
    sample_every,
    seed,
    audit_every,
):  # pragma: no cover - measured via output equality with the python loop
    np.random.seed(seed)
    N = doc_idx.shape[0]
    n_dk = np.zeros((D, K))
    n_kw = np.zeros((K, V))
    n_k = np.zeros(K)
    z = np.empty(N, dtype=np.int64)

    for i in range(N):
        u = np.random.random()
        st = seeded_topic[word_idx[i]]
        if plain_init or st < 0:
            k = int(u * K)
            if k > K - 1:
                k = K - 1
        elif u < pi:
            k = st
        else:
            r = (u - pi) / (1.0 - pi)
            k = int(r * (K - 1))
            if k > K - 2:
                k = K - 2
            if k >= st:
                k += 1
        z[i] = k
        w = weights[i]
        n_dk[doc_idx[i], k] += w
        n_kw[k, word_idx[i]] += w
        n_k[k] += w

    total_weight = 0.0
    for i in range(N):
        total_weight += weights[i]
    doc_totals = np.zeros(D)
    for i in range(N):
        doc_totals[doc_idx[i]] += weights[i]

    acc_dk = np.zeros((D, K))
    acc_kw = np.zeros((K, V))
    n_samples = 0
    max_dev = 0.0
    probs = np.empty(K)
    vbeta = V * beta

    for it in range(1, iterations + 1):
        for i in range(N):
            d = doc_idx[i]
            wd = word_idx[i]
            w = weights[i]
            k = z[i]
            n_dk[d, k] -= w
            n_kw[k, wd] -= w
            n_k[k] -= w
            total = 0.0
            for kk in range(K):
                p = (
                    (n_dk[d, kk] + alpha)
                    * (n_kw[kk, wd] + beta + boost_kw[kk, wd])
                    / (n_k[kk] + vbeta + boost_k[kk])
                )
                probs[kk] = p
                total += p
            u = np.random.random() * total
            acc = 0.0
            k_new = K - 1
            for kk in range(K):
                acc += probs[kk]
                if u < acc:
                    k_new = kk
                    break
            z[i] = k_new
            n_dk[d, k_new] += w
            n_kw[k_new, wd] += w
            n_k[k_new] += w
        if it > burn_in and (it - burn_in) % sample_every == 0:
            for d in range(D):
                for kk in range(K):
                    acc_dk[d, kk] += n_dk[d, kk]
            for kk in range(K):
                for v in range(V):
                    acc_kw[kk, v] += n_kw[kk, v]
            n_samples += 1
        if audit_every > 0 and it % audit_every == 0:
            dev = abs(n_k.sum() - total_weight)
            for d in range(D):
                s = 0.0
                for kk in range(K):
                    s += n_dk[d, kk]
                diff = abs(s - doc_totals[d])
                if diff > dev:
                    dev = diff
            for kk in range(K):
                s = 0.0
                for v in range(V):
                    s += n_kw[kk, v]
                diff = abs(s - n_k[kk])
                if diff > dev:
                    dev = diff
            if dev > max_dev:
                max_dev = dev
    return acc_dk, acc_kw, n_dk, n_kw, n_samples, max_dev


def _fit(
    matrix: DocTermMatrix,
    terms: tuple[str, ...],
    K: int,
    alpha: float | None,
    beta: float,
    iterations: int,
    burn_in: int,
    sample_every: int,
    rng_seed: int,
    variant: str,
    boost_kw: np.ndarray | None,
    seeded_topic: np.ndarray | None,
    pi: float,
    labels: tuple[str, ...] | None,
    vocab_hash: str,
    audit_every: int,
    force_python: bool,
) -> TopicModel:
    if matrix.n_docs == 0:
        raise ValueError("cannot fit a topic model on an empty matrix")
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    total_tokens = sum(matrix.token_totals)
    if K > total_tokens:
        raise ValueError(
            f"K={K} exceeds the corpus token count {total_tokens:g}"
        )
    if iterations < 1 or burn_in < 0 or sample_every < 1:
        raise ValueError("iterations >= 1, burn_in >= 0, sample_every >= 1 required")
    if alpha is None:
        alpha = 50.0 / K

    D, V = matrix.n_docs, matrix.vocab_size
    doc_idx, word_idx, weights = _sampling_sites(matrix)
    if boost_kw is None:
        boost = np.zeros((K, V))
    else:
        boost = np.asarray(boost_kw, dtype=np.float64)
    boost_k = boost.sum(axis=1)
    if seeded_topic is None:
        seeded = np.full(V, -1, dtype=np.int64)
        pi_eff = 1.0 / K
    else:
        seeded = seeded_topic
        pi_eff = pi
    # pi = 1/K biases nothing; share the plain init path so the guided
    # sampler degenerates bit-for-bit to fit_lda when also boost = 0.
    plain_init = abs(pi_eff * K - 1.0) < 1e-12

    loop = _gibbs_loop_python if (force_python or not HAVE_NUMBA) else _gibbs_loop_numba
    acc_dk, acc_kw, n_dk, n_kw, n_samples, max_dev = loop(
        doc_idx,
        word_idx,
        weights,
        D,
        V,
        K,
        float(alpha),
        float(beta),
        boost,
        boost_k,
        seeded,
        float(pi_eff),
        plain_init,
        iterations,
        burn_in,
        sample_every,
        rng_seed,
        audit_every,
    )
    if max_dev > 1e-9:
        raise AssertionError(
            f"Gibbs count conservation violated: max deviation {max_dev:g}"
        )
    if n_samples == 0:
        acc_dk, acc_kw, n_samples = n_dk, n_kw, 1

    phi_num = acc_kw / n_samples + beta + boost
    phi = phi_num / phi_num.sum(axis=1, keepdims=True)
    theta_num = acc_dk / n_samples + alpha
    theta = theta_num / theta_num.sum(axis=1, keepdims=True)

    return TopicModel(
        phi=phi,
        theta=theta,
        terms=terms,
        doc_ids=matrix.doc_ids,
        K=K,
        alpha=float(alpha),
        beta=float(beta),
        variant=variant,
        rng_seed=rng_seed,
        iterations=iterations,
        burn_in=burn_in,
        sample_every=sample_every,
        vocab_hash=vocab_hash,
        beta_boost=boost_kw,
        labels=labels,
    )


def fit_lda(
    matrix: DocTermMatrix,
    vocab: Vocabulary,
    K: int = 6,
    alpha: float | None = None,
    beta: float = DEFAULT_BETA,
    iterations: int = DEFAULT_ITERATIONS,
    burn_in: int = DEFAULT_BURN_IN,
    sample_every: int = DEFAULT_SAMPLE_EVERY,
    rng_seed: int = 0,
    labels: tuple[str, ...] | None = None,
    vocab_hash: str = "",
    audit_every: int = 100,
    force_python: bool = False,
) -> TopicModel:
    """Collapsed Gibbs LDA; variant name follows the matrix kind."""
    variant = "plain" if matrix.kind == "counts" else "tfidf"
    return _fit(
        matrix,
        vocab.terms,
        K,
        alpha,
        beta,
        iterations,
        burn_in,
        sample_every,
        rng_seed,
        variant,
        None,
        None,
        1.0 / max(K, 1),
        labels,
        vocab_hash,
        audit_every,
        force_python,
    )


def fit_guided_lda(
    matrix: DocTermMatrix,
    vocab: Vocabulary,
    seeds: SeedSet,
    boost: float = 0.5,
    pi: float = 0.9,
    K: int = 6,
    alpha: float | None = None,
    beta: float = DEFAULT_BETA,
    iterations: int = DEFAULT_ITERATIONS,
    burn_in: int = DEFAULT_BURN_IN,
    sample_every: int = DEFAULT_SAMPLE_EVERY,
    rng_seed: int = 0,
    labels: tuple[str, ...] | None = None,
    vocab_hash: str = "",
    audit_every: int = 100,
    force_python: bool = False,
) -> TopicModel:
    """Guided variant: seed-biased initialization plus additive phi prior.

    Initialization sends a seeded word's token to its seeded topic with
    probability pi (uniform over the remaining topics otherwise);
    beta_boost[k, w] = boost for every seeded (k, w).
    """
    if not 0.0 < pi <= 1.0:
        raise ValueError(f"pi must be in (0, 1], got {pi}")
    if boost < 0.0:
        raise ValueError(f"boost must be >= 0, got {boost}")
    V = matrix.vocab_size
    boost_kw = np.zeros((K, V))
    seeded_topic = np.full(V, -1, dtype=np.int64)
    for topic, terms in sorted(seeds.assignments.items()):
        if not 0 <= topic < K:
            raise ValueError(f"seed topic {topic} outside 0..{K - 1}")
        for term in sorted(terms):
            w = vocab.index.get(term)
            if w is None:
                raise ValueError(f"seed term {term!r} not in vocabulary")
            boost_kw[topic, w] = boost
            if seeded_topic[w] < 0:
                seeded_topic[w] = topic
    return _fit(
        matrix,
        vocab.terms,
        K,
        alpha,
        beta,
        iterations,
        burn_in,
        sample_every,
        rng_seed,
        "guided",
        boost_kw if boost > 0 else None,
        seeded_topic,
        pi,
        labels,
        vocab_hash,
        audit_every,
        force_python,
    )


def top_words(model: TopicModel, k: int, n: int = 10) -> list[tuple[str, float]]:
    """The n highest-phi terms of topic k; ties break lexicographically."""
    if not 0 <= k < model.K:
        raise ValueError(f"topic {k} outside 0..{model.K - 1}")
    row = model.phi[k]
    order = sorted(range(len(model.terms)), key=lambda i: (-row[i], model.terms[i]))
    return [(model.terms[i], float(row[i])) for i in order[:n]]


def dominant_topic(theta_row: np.ndarray) -> tuple[int, float]:
    """(argmax topic, its mass); ties resolve to the lowest index."""
    k = int(np.argmax(theta_row))
    return k, float(theta_row[k])


def umass_coherence(
    model: TopicModel, matrix: DocTermMatrix, n: int = 10
) -> list[float]:
    """Per-topic UMass coherence over the top-n words.

    Mean over ranked pairs (i < j) of ln((codf(w_i, w_j) + 1) / df(w_j)),
    with document presence taken from the matrix rows. Zero when every
    pair always co-occurs (ratio collapses to ~1); negative when top words
    never share documents.
    """
    presence: list[set[int]] = [set() for _ in range(matrix.vocab_size)]
    for d, row in enumerate(matrix.rows):
        for term_id, weight in row:
            if weight > 0:
                presence[term_id].add(d)
    index = {t: i for i, t in enumerate(model.terms)}
    scores = []
    for k in range(model.K):
        words = [index[t] for t, _ in top_words(model, k, n)]
        total = 0.0
        pairs = 0
        for j in range(1, len(words)):
            for i in range(j):
                docs_j = presence[words[j]]
                if not docs_j:
                    continue
                co = len(presence[words[i]] & docs_j)
                total += math.log((co + 1.0) / len(docs_j))
                pairs += 1
        scores.append(total / pairs if pairs else 0.0)
    return scores


def vocab_content_hash(path: str | Path) -> str:
    """sha256 of a vocabulary file, used as the model's vocab reference."""
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        digest.update(fh.read())
    return digest.hexdigest()
