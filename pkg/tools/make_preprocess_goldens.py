"""Freeze preprocessing goldens for the bundled toy corpus.

Runs the pipeline once over doc05 (the abbreviation-guard document) and a
small set of probe strings, asserts hand-derived anchor facts, and pins
the full outputs. Tests replay these files verbatim.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from agrisk.corpus import load_corpus
from agrisk.preprocess import (
    PreprocessConfig,
    normalize_case,
    preprocess_document,
    segment_sentences,
    tokenize,
)

OUT = ROOT / "tests" / "data" / "preprocess_goldens.json"


def main() -> None:
    corpus = load_corpus(ROOT / "src" / "agrisk" / "data" / "toy_corpus.csv")
    doc05 = corpus.get("doc05")
    processed = preprocess_document(doc05, PreprocessConfig())

    # Hand-derived anchors: the "Dr." guard must hold the second sentence
    # together, and hyphenated tokens stay whole.
    sentences = list(processed.sentences)
    assert len(sentences) == 5, sentences
    assert sentences[1].startswith("Dr. Amara"), sentences[1]
    assert "volatility" in processed.tokens
    assert "price" in processed.tokens and "prices" not in processed.tokens

    probes = {
        "lowercase": normalize_case("Rainfall FLOODS the Valley"),
        "tokens_hyphen": tokenize("pests, drought-resistant crops"),
        "tokens_title": tokenize(doc05.title),
        "sentences_guard": segment_sentences("Dr. Rao spoke. Crops failed."),
        "sentences_doc05": sentences,
    }
    assert probes["tokens_hyphen"] == ["pests", "drought-resistant", "crops"]
    assert probes["sentences_guard"] == ["Dr. Rao spoke.", "Crops failed."]

    payload = {
        "doc05": {
            "doc_id": processed.doc_id,
            "tokens": list(processed.tokens),
            "sentences": sentences,
        },
        "probes": probes,
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    with open(OUT, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1, ensure_ascii=False)
        fh.write("\n")
    print(f"wrote {OUT}")
    print("doc05 tokens:", processed.tokens[:12])


if __name__ == "__main__":
    main()
