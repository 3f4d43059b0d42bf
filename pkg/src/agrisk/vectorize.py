"""Vocabulary filtering, bag-of-words counts, and TF-IDF weighting.

Term ids are assigned by descending total corpus frequency with
lexicographic tie-breaks, which fixes the column order of every matrix
downstream and makes fitted models byte-reproducible.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .errors import EmptyVocabularyError
from .preprocess import ProcessedDocument


@dataclass(frozen=True)
class Vocabulary:
    """Filtered term set with dense ids and document frequencies."""

    terms: tuple[str, ...]
    df: dict[str, int]
    index: dict[str, int] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not self.index:
            object.__setattr__(
                self, "index", {t: i for i, t in enumerate(self.terms)}
            )

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.index

    def save(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for i, term in enumerate(self.terms):
                fh.write(f"{i}\t{term}\t{self.df[term]}\n")

    @classmethod
    def load(cls, path: str | Path) -> "Vocabulary":
        terms = []
        df = {}
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                _, term, count = line.rstrip("\n").split("\t")
                terms.append(term)
                df[term] = int(count)
        return cls(terms=tuple(terms), df=df)


@dataclass(frozen=True)
class DocTermMatrix:
    """Sparse document-term matrix.

    rows[d] is a list of (term id, weight) with ids ascending. token_totals
    keeps each document's raw in-vocabulary token count so that weighted
    model fitting can rescale real-valued rows back to count mass.
    """

    rows: tuple[tuple[tuple[int, float], ...], ...]
    doc_ids: tuple[str, ...]
    kind: str
    vocab_size: int
    token_totals: tuple[float, ...]

    @property
    def n_docs(self) -> int:
        return len(self.rows)

    def save(self, path: str | Path, vocab: Vocabulary) -> None:
        """TSV artifact: one header line, one "#doc" line per document
        (id and token total, preserving empty rows and order), then
        doc/term/weight triplets. Integer weights round-trip exactly;
        real weights carry 9 significant digits."""
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(f"# kind={self.kind} docs={self.n_docs} vocab={self.vocab_size}\n")
            for doc_id, total in zip(self.doc_ids, self.token_totals):
                fh.write(f"#doc\t{doc_id}\t{total:.9g}\n")
            for doc_id, row in zip(self.doc_ids, self.rows):
                for term_id, weight in row:
                    term = vocab.terms[term_id]
                    fh.write(f"{doc_id}\t{term}\t{weight:.9g}\n")

    @classmethod
    def load(cls, path: str | Path, vocab: Vocabulary) -> "DocTermMatrix":
        with open(path, encoding="utf-8") as fh:
            header = fh.readline().strip()
            fields = dict(part.split("=") for part in header.lstrip("# ").split())
            kind = fields["kind"]
            n_docs = int(fields["docs"])
            vocab_size = int(fields["vocab"])
            doc_ids: list[str] = []
            totals: list[float] = []
            for _ in range(n_docs):
                tag, doc_id, total = fh.readline().rstrip("\n").split("\t")
                if tag != "#doc":
                    raise ValueError(f"expected #doc line, got {tag!r}")
                doc_ids.append(doc_id)
                totals.append(float(total))
            order = {doc_id: i for i, doc_id in enumerate(doc_ids)}
            rows: list[list[tuple[int, float]]] = [[] for _ in range(n_docs)]
            for line in fh:
                doc_id, term, weight = line.rstrip("\n").split("\t")
                rows[order[doc_id]].append((vocab.index[term], float(weight)))
        return cls(
            rows=tuple(tuple(row) for row in rows),
            doc_ids=tuple(doc_ids),
            kind=kind,
            vocab_size=vocab_size,
            token_totals=tuple(totals),
        )


def build_vocabulary(
    docs: list[ProcessedDocument],
    min_df: int = 15,
    max_df_ratio: float = 0.90,
    max_terms: int = 3000,
    rank_by: str = "frequency",
) -> Vocabulary:
    """Filter terms by document frequency, then keep the top max_terms.

    Ranking uses total corpus frequency by default; rank_by="df" ranks by
    document frequency instead. Ties break lexicographically either way.
    """
    if rank_by not in ("frequency", "df"):
        raise ValueError(f"unknown rank_by: {rank_by!r}")
    n_docs = len(docs)
    if n_docs == 0:
        raise EmptyVocabularyError("cannot build a vocabulary from an empty corpus")

    df: Counter[str] = Counter()
    freq: Counter[str] = Counter()
    for doc in docs:
        counts = Counter(doc.tokens)
        freq.update(counts)
        df.update(counts.keys())

    kept = [
        t
        for t in df
        if df[t] >= min_df and df[t] / n_docs <= max_df_ratio
    ]
    if not kept:
        raise EmptyVocabularyError(
            f"df filters (min_df={min_df}, max_df_ratio={max_df_ratio}) "
            f"removed all {len(df)} terms over {n_docs} documents"
        )
    key = freq if rank_by == "frequency" else df
    kept.sort(key=lambda t: (-key[t], t))
    kept = kept[:max_terms]
    return Vocabulary(terms=tuple(kept), df={t: df[t] for t in kept})


def to_bow_row(doc: ProcessedDocument, vocab: Vocabulary) -> tuple[tuple[int, float], ...]:
    """Sparse (id, count) pairs for one document, ids ascending."""
    counts: Counter[int] = Counter()
    for token in doc.tokens:
        term_id = vocab.index.get(token)
        if term_id is not None:
            counts[term_id] += 1
    return tuple(sorted((i, float(c)) for i, c in counts.items()))


def to_bow(docs: list[ProcessedDocument], vocab: Vocabulary) -> DocTermMatrix:
    rows = tuple(to_bow_row(doc, vocab) for doc in docs)
    totals = tuple(sum(w for _, w in row) for row in rows)
    return DocTermMatrix(
        rows=rows,
        doc_ids=tuple(d.doc_id for d in docs),
        kind="counts",
        vocab_size=len(vocab),
        token_totals=totals,
    )


def idf_weights(vocab: Vocabulary, n_docs: int) -> list[float]:
    """Smoothed idf per term id: ln((1+D)/(1+df)) + 1."""
    return [
        math.log((1.0 + n_docs) / (1.0 + vocab.df[t])) + 1.0 for t in vocab.terms
    ]


def tfidf_transform(matrix: DocTermMatrix, vocab: Vocabulary) -> DocTermMatrix:
    """tf×idf with L2 row normalization; sparsity pattern preserved."""
    if matrix.kind != "counts":
        raise ValueError(f"expected a counts matrix, got kind={matrix.kind!r}")
    idf = idf_weights(vocab, matrix.n_docs)
    rows = []
    for row in matrix.rows:
        weighted = [(i, w * idf[i]) for i, w in row]
        norm = math.sqrt(sum(w * w for _, w in weighted))
        if norm > 0:
            weighted = [(i, w / norm) for i, w in weighted]
        rows.append(tuple(weighted))
    return DocTermMatrix(
        rows=tuple(rows),
        doc_ids=matrix.doc_ids,
        kind="tfidf",
        vocab_size=matrix.vocab_size,
        token_totals=matrix.token_totals,
    )


def top_terms_by_tfidf(
    matrix: DocTermMatrix, vocab: Vocabulary, n: int
) -> list[tuple[str, float]]:
    """Terms ranked by summed TF-IDF weight across all rows, top n."""
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")
    if matrix.kind != "tfidf":
        raise ValueError(f"expected a tfidf matrix, got kind={matrix.kind!r}")
    totals = [0.0] * matrix.vocab_size
    for row in matrix.rows:
        for term_id, weight in row:
            totals[term_id] += weight
    ranked = sorted(
        range(matrix.vocab_size), key=lambda i: (-totals[i], vocab.terms[i])
    )
    return [(vocab.terms[i], totals[i]) for i in ranked[:n] if totals[i] > 0]
