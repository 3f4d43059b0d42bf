"""Rule-based valence sentiment scoring for sentences and documents.

Per token, in this order: lexicon lookup, booster adjustment, negation
flip, all-caps emphasis. Then but-clause reweighting of the valence list,
then exclamation emphasis on the summed valence, then normalization to a
compound in (-1, 1). Implemented rule subset: boosters, negation, caps,
exclamation, but-clause; idiom handling, the question-mark rule, and the
"least" special case are out of scope. Booster words never carry their own
valence and caps emphasis applies to lexicon hits only.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import Document
from .preprocess import segment_sentences

_TOKEN = re.compile(r"\w+(?:['’-]\w+)*")

DATA_DIR = Path(__file__).resolve().parent / "data"

COMBINERS = ("mean", "max_magnitude", "length_weighted")


@dataclass(frozen=True)
class RuleConstants:
    """Emphasis constants of the scoring rules (cited-method defaults)."""

    booster_incr: float = 0.293
    booster_damp_dist2: float = 0.95
    booster_damp_dist3: float = 0.9
    negation_scalar: float = -0.74
    negation_window: int = 3
    caps_incr: float = 0.733
    exclamation_incr: float = 0.292
    max_exclamations: int = 4
    but_before: float = 0.5
    but_after: float = 1.5
    normalization_alpha: float = 15.0


@dataclass(frozen=True)
class ValenceLexicon:
    """Word valences plus booster modifiers and negation markers."""

    words: dict[str, float]
    boosters: dict[str, float]
    negations: frozenset[str]
    constants: RuleConstants = field(default_factory=RuleConstants)

    def __post_init__(self):
        if not self.words:
            raise ValueError("valence lexicon is empty")
        for table, name in ((self.words, "lexicon"), (self.boosters, "booster")):
            for key in table:
                if key != key.lower():
                    raise ValueError(f"{name} key {key!r} is not lowercase")
        overlap = set(self.boosters) & set(self.words)
        if overlap:
            raise ValueError(f"booster words carry valence: {sorted(overlap)}")

    @classmethod
    def load(
        cls,
        lexicon_path: str | Path | None = None,
        rules_path: str | Path | None = None,
    ) -> "ValenceLexicon":
        lexicon_path = lexicon_path or DATA_DIR / "sentiment_lexicon.tsv"
        rules_path = rules_path or DATA_DIR / "sentiment_rules.json"
        words: dict[str, float] = {}
        with open(lexicon_path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                token, valence = line.split("\t")
                words[token] = float(valence)
        with open(rules_path, encoding="utf-8") as fh:
            rules = json.load(fh)
        return cls(
            words=words,
            boosters={k: float(v) for k, v in rules["boosters"].items()},
            negations=frozenset(rules["negations"]),
            constants=RuleConstants(**rules["constants"]),
        )


@dataclass(frozen=True)
class SentimentScores:
    """pos/neg/neu ratios plus the normalized compound score."""

    pos: float
    neg: float
    neu: float
    compound: float

    def __post_init__(self):
        if abs(self.pos + self.neg + self.neu - 1.0) > 1e-6:
            raise ValueError(
                f"ratios must sum to 1: {self.pos} + {self.neg} + {self.neu}"
            )
        if not -1.0 <= self.compound <= 1.0:
            raise ValueError(f"compound {self.compound} outside [-1, 1]")


def normalize_compound(s: float, alpha: float = 15.0) -> float:
    """Squash a raw valence sum into (-1, 1); odd and strictly monotone."""
    return s / math.sqrt(s * s + alpha)


def _is_negation(token: str, negations: frozenset[str]) -> bool:
    # n't contractions negate even when absent from the marker set.
    return token in negations or "n't" in token or "n’t" in token


def _token_valence(
    i: int,
    tokens: list[str],
    lows: list[str],
    cap_diff: bool,
    lexicon: ValenceLexicon,
) -> float:
    c = lexicon.constants
    low = lows[i]
    if low in lexicon.boosters:
        return 0.0
    v = lexicon.words.get(low)
    if v is None:
        return 0.0
    damping = {1: 1.0, 2: c.booster_damp_dist2, 3: c.booster_damp_dist3}
    for dist, damp in damping.items():
        j = i - dist
        if j < 0:
            break
        b = lexicon.boosters.get(lows[j])
        if b is not None:
            v += (b if v > 0 else -b) * damp
    window = lows[max(0, i - c.negation_window) : i]
    if any(_is_negation(t, lexicon.negations) for t in window):
        v *= c.negation_scalar
    if cap_diff and tokens[i].isupper():
        if v > 0:
            v += c.caps_incr
        elif v < 0:
            v -= c.caps_incr
    return v


def score_sentence(sentence: str, lexicon: ValenceLexicon) -> SentimentScores:
    """Score one raw-text sentence under the pinned rule order."""
    c = lexicon.constants
    tokens = _TOKEN.findall(sentence)
    lows = [t.lower() for t in tokens]
    uppers = [t.isupper() for t in tokens]
    cap_diff = any(uppers) and not all(uppers)

    valences = [
        _token_valence(i, tokens, lows, cap_diff, lexicon)
        for i in range(len(tokens))
    ]

    if "but" in lows:
        bi = lows.index("but")
        for i in range(len(valences)):
            if i < bi:
                valences[i] *= c.but_before
            elif i > bi:
                valences[i] *= c.but_after

    emphasis = min(sentence.count("!"), c.max_exclamations) * c.exclamation_incr

    total = sum(valences)
    if total > 0:
        total += emphasis
    elif total < 0:
        total -= emphasis
    compound = normalize_compound(total, c.normalization_alpha)

    pos = sum(v + 1.0 for v in valences if v > 0)
    neg = sum(v - 1.0 for v in valences if v < 0)
    neu = float(sum(1 for v in valences if v == 0))
    if pos > abs(neg):
        pos += emphasis
    elif pos < abs(neg):
        neg -= emphasis
    mass = pos + abs(neg) + neu
    if mass == 0:
        return SentimentScores(pos=0.0, neg=0.0, neu=1.0, compound=0.0)
    return SentimentScores(
        pos=pos / mass, neg=abs(neg) / mass, neu=neu / mass, compound=compound
    )


def score_document(
    doc: Document,
    lexicon: ValenceLexicon,
    combiner: str = "mean",
) -> SentimentScores:
    """Combine per-sentence scores into one document score.

    combiner: "mean" averages compounds; "max_magnitude" takes the
    strongest sentence's scores wholesale; "length_weighted" weights each
    sentence by its token count. pos/neg/neu are (weighted) means
    renormalized to sum 1.
    """
    if combiner not in COMBINERS:
        raise ValueError(f"combiner must be one of {COMBINERS}, got {combiner!r}")
    sentences = segment_sentences(doc.content)
    if not sentences:
        raise ValueError(f"document {doc.id!r} has no sentences")
    scored = [score_sentence(s, lexicon) for s in sentences]

    if combiner == "max_magnitude":
        best = max(scored, key=lambda s: abs(s.compound))
        return best
    if combiner == "length_weighted":
        weights = [max(len(_TOKEN.findall(s)), 1) for s in sentences]
    else:
        weights = [1] * len(scored)
    wsum = sum(weights)
    compound = sum(w * s.compound for w, s in zip(weights, scored)) / wsum
    pos = sum(w * s.pos for w, s in zip(weights, scored)) / wsum
    neg = sum(w * s.neg for w, s in zip(weights, scored)) / wsum
    neu = sum(w * s.neu for w, s in zip(weights, scored)) / wsum
    mass = pos + neg + neu
    return SentimentScores(
        pos=pos / mass, neg=neg / mass, neu=neu / mass, compound=compound
    )


def score_sentences(
    sentences: tuple[str, ...] | list[str], lexicon: ValenceLexicon
) -> list[SentimentScores]:
    """Per-sentence scores for already-segmented text (service drill-down)."""
    return [score_sentence(s, lexicon) for s in sentences]
