"""Article corpus ingestion, validation, and persistence.

A corpus is an ordered, id-unique collection of news documents loaded from
local CSV (RFC 4180, header required) or JSONL files. The canonical save
format is JSONL: one object per line with a fixed key order, so that
save -> load -> save round-trips byte-identically.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field
from datetime import date
from pathlib import Path
from typing import Iterator

from .errors import DuplicateIdError, RowValidationError, SchemaError

REQUIRED_FIELDS = ("id", "title", "content", "published", "source")

# Full ISO dates only: a month without a day must be rejected, not guessed.
_ISO_DATE = re.compile(r"^\d{4}-\d{2}-\d{2}$")


def _parse_date(value: str, row: int) -> date:
    if not _ISO_DATE.match(value or ""):
        raise RowValidationError(row, f"published {value!r} is not a full YYYY-MM-DD date")
    try:
        return date.fromisoformat(value)
    except ValueError as exc:
        raise RowValidationError(row, f"published {value!r}: {exc}") from None


@dataclass(frozen=True)
class Document:
    """One news article: raw (title, content) pair plus identity metadata."""

    id: str
    title: str
    content: str
    published: date
    source: str

    def validate(self, row: int = -1) -> "Document":
        if not self.id:
            raise RowValidationError(row, "empty document id")
        if not self.content.strip():
            raise RowValidationError(row, f"document {self.id!r} has empty content")
        return self


@dataclass
class Corpus:
    """Ordered list of documents with id lookup and source provenance."""

    documents: list[Document] = field(default_factory=list)
    provenance: list[str] = field(default_factory=list)

    def __post_init__(self):
        self._by_id = {}
        for doc in self.documents:
            if doc.id in self._by_id:
                raise DuplicateIdError(doc.id)
            self._by_id[doc.id] = doc

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self) -> Iterator[Document]:
        return iter(self.documents)

    def get(self, doc_id: str) -> Document:
        return self._by_id[doc_id]

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self._by_id


def _rows_from_csv(path: Path) -> Iterator[dict]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for column in REQUIRED_FIELDS:
            if column not in header:
                raise SchemaError(column, str(path))
        yield from reader


def _rows_from_jsonl(path: Path) -> Iterator[dict]:
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            obj = json.loads(line)
            for column in REQUIRED_FIELDS:
                if column not in obj:
                    raise SchemaError(column, f"{path}:{lineno}")
            yield obj


def load_corpus(path: str | Path, format: str | None = None) -> Corpus:
    """Load and validate a corpus from a CSV or JSONL file.

    Row order is preserved. Every row must carry the five required fields,
    ids must be unique, content non-empty, and dates full ISO YYYY-MM-DD.
    `format` defaults from the file suffix (.csv / .jsonl).
    """
    path = Path(path)
    if format is None:
        format = "csv" if path.suffix.lower() == ".csv" else "jsonl"
    if format == "csv":
        rows = _rows_from_csv(path)
    elif format == "jsonl":
        rows = _rows_from_jsonl(path)
    else:
        raise ValueError(f"unknown corpus format {format!r}")

    documents = []
    seen = set()
    for row_no, row in enumerate(rows, start=1):
        doc_id = str(row["id"])
        if doc_id in seen:
            raise DuplicateIdError(doc_id)
        seen.add(doc_id)
        doc = Document(
            id=doc_id,
            title=str(row["title"]),
            content=str(row["content"]),
            published=_parse_date(str(row["published"]), row_no),
            source=str(row["source"]),
        ).validate(row_no)
        documents.append(doc)
    return Corpus(documents=documents, provenance=[f"{format}:{path}"])


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    """Write the corpus as canonical JSONL (fixed key order, UTF-8)."""
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_corpus(corpus))


def dumps_corpus(corpus: Corpus) -> str:
    out = io.StringIO()
    for doc in corpus:
        obj = {
            "id": doc.id,
            "title": doc.title,
            "content": doc.content,
            "published": doc.published.isoformat(),
            "source": doc.source,
        }
        out.write(json.dumps(obj, ensure_ascii=False, separators=(",", ":")))
        out.write("\n")
    return out.getvalue()


def filter_by_date(corpus: Corpus, from_date: date, to_date: date) -> Corpus:
    """Keep documents with from_date <= published <= to_date, order preserved."""
    if from_date > to_date:
        raise ValueError(f"from_date {from_date} is after to_date {to_date}")
    kept = [d for d in corpus if from_date <= d.published <= to_date]
    return Corpus(documents=kept, provenance=corpus.provenance + [f"date-filter:{from_date}..{to_date}"])
