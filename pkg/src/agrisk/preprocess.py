"""Deterministic text normalization: case folding, tokenization, sentence
segmentation, lemmatization, and noise removal.

The lemmatizer consults a bundled inflection table first and falls back to
ordered suffix rules; the stopword list is a pinned data file. Both paths
are overridable through :class:`PreprocessConfig`, and every step is a pure
function so the pipeline is reproducible input-for-input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .corpus import Document

_DATA_DIR = Path(__file__).parent / "data"
DEFAULT_STOPWORDS_PATH = _DATA_DIR / "stopwords.txt"
DEFAULT_LEMMAS_PATH = _DATA_DIR / "lemmas.tsv"

# Word = letters/digits, optionally chained by single intra-word hyphens or
# apostrophes ("drought-resistant", "don't" are single tokens).
_TOKEN = re.compile(r"\w+(?:['’-]\w+)*")

# Sentence boundary: a run of .!? followed by whitespace and an uppercase
# letter. Boundaries ending in a guarded abbreviation do not split.
_BOUNDARY = re.compile(r"[.!?]+\s+")

ABBREVIATIONS = frozenset(
    [
        "dr.", "mr.", "mrs.", "ms.", "prof.", "st.", "no.", "vs.", "fig.",
        "e.g.", "i.e.", "etc.", "cf.", "al.", "u.s.", "u.k.", "u.n.", "e.u.",
        "jan.", "feb.", "mar.", "apr.", "jun.", "jul.", "aug.", "sep.",
        "sept.", "oct.", "nov.", "dec.",
    ]
)


def normalize_case(text: str) -> str:
    """Lowercase every cased letter; all other characters are unchanged."""
    return text.lower()


def tokenize(text: str) -> list[str]:
    """Split on whitespace/punctuation, keeping intra-word hyphens and apostrophes."""
    return _TOKEN.findall(text)


def segment_sentences(text: str) -> list[str]:
    """Split raw text into sentences without losing non-whitespace characters.

    A split happens after '.', '!' or '?' runs that are followed by
    whitespace and a capital letter, unless the word ending at a '.' run is
    a guarded abbreviation ("Dr.", "U.S.", "e.g.", ...).
    """
    sentences = []
    start = 0
    for match in _BOUNDARY.finditer(text):
        punct_end = match.start() + len(match.group().rstrip())
        follow = match.end()
        if follow >= len(text) or not text[follow].isupper():
            continue
        # The word ending at the punctuation run, e.g. "Dr." or "U.S.".
        word_start = punct_end
        while word_start > start and not text[word_start - 1].isspace():
            word_start -= 1
        word = text[word_start:punct_end]
        if word.endswith(".") and "!" not in word and "?" not in word:
            if word.lower() in ABBREVIATIONS:
                continue
        piece = text[start:punct_end].strip()
        if piece:
            sentences.append(piece)
        start = follow
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def _fallback_lemma(token: str, known_lemmas: frozenset[str]) -> str:
    """Ordered suffix rules applied when the token is not in the table."""
    if token.endswith("ies") and len(token) > 3:
        return token[:-3] + "y"
    if token.endswith("es") and len(token) - 2 >= 3:
        return token[:-2]
    if token.endswith("s") and not token.endswith("ss") and len(token) > 1:
        return token[:-1]
    if token.endswith("ing") and len(token) > 3:
        stem = token[:-3]
        # Restore a silent 'e' when the table knows the e-form lemma.
        if stem + "e" in known_lemmas and stem not in known_lemmas:
            return stem + "e"
        return stem
    if token.endswith("ed") and len(token) > 2:
        return token[:-2]
    return token


class Lemmatizer:
    """Table-first lemmatizer with deterministic suffix fallback rules."""

    def __init__(self, table: dict[str, str]):
        self.table = table
        self.known_lemmas = frozenset(table.values())

    @classmethod
    def from_file(cls, path: str | Path) -> "Lemmatizer":
        table = {}
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.rstrip("\n")
                if not line or line.startswith("#"):
                    continue
                inflected, lemma = line.split("\t")
                table[inflected] = lemma
        return cls(table)

    def __call__(self, token: str) -> str:
        hit = self.table.get(token)
        if hit is not None:
            return hit
        return _fallback_lemma(token, self.known_lemmas)


def load_stopwords(path: str | Path) -> frozenset[str]:
    with open(path, encoding="utf-8") as fh:
        return frozenset(w.strip() for w in fh if w.strip() and not w.startswith("#"))


@lru_cache(maxsize=4)
def _cached_lemmatizer(path: str) -> Lemmatizer:
    return Lemmatizer.from_file(path)


@lru_cache(maxsize=4)
def _cached_stopwords(path: str) -> frozenset[str]:
    return load_stopwords(path)


def lemmatize(token: str, lemmatizer: Lemmatizer | None = None) -> str:
    """Lemmatize one lowercased token (bundled table by default)."""
    if lemmatizer is None:
        lemmatizer = _cached_lemmatizer(str(DEFAULT_LEMMAS_PATH))
    return lemmatizer(token)


def remove_noise(tokens: list[str], stoplist: frozenset[str] | set[str]) -> list[str]:
    """Drop stopwords, tokens without any letter, and single-character tokens."""
    return [
        t
        for t in tokens
        if len(t) > 1 and t not in stoplist and any(c.isalpha() for c in t)
    ]


@dataclass(frozen=True)
class ProcessedDocument:
    """Normalized token stream plus raw sentences of one document."""

    doc_id: str
    tokens: tuple[str, ...]
    sentences: tuple[str, ...]


@dataclass
class PreprocessConfig:
    stopwords_path: str = str(DEFAULT_STOPWORDS_PATH)
    lemmas_path: str = str(DEFAULT_LEMMAS_PATH)
    _stopwords: frozenset[str] | None = field(default=None, repr=False)
    _lemmatizer: Lemmatizer | None = field(default=None, repr=False)

    @property
    def stopwords(self) -> frozenset[str]:
        if self._stopwords is None:
            self._stopwords = _cached_stopwords(self.stopwords_path)
        return self._stopwords

    @property
    def lemmatizer(self) -> Lemmatizer:
        if self._lemmatizer is None:
            self._lemmatizer = _cached_lemmatizer(self.lemmas_path)
        return self._lemmatizer


def preprocess_text(text: str, config: PreprocessConfig) -> list[str]:
    """normalize -> tokenize -> lemmatize -> de-noise, in that order."""
    tokens = tokenize(normalize_case(text))
    lemmas = [config.lemmatizer(t) for t in tokens]
    return remove_noise(lemmas, config.stopwords)


def preprocess_document(doc: Document, config: PreprocessConfig | None = None) -> ProcessedDocument:
    """Run the full normalization pipeline on one document's content.

    Sentences are segmented from the raw content (original casing kept for
    the sentiment rules); tokens go through the normalization chain.
    """
    if config is None:
        config = PreprocessConfig()
    return ProcessedDocument(
        doc_id=doc.id,
        tokens=tuple(preprocess_text(doc.content, config)),
        sentences=tuple(segment_sentences(doc.content)),
    )
