"""Independent sentence-scoring oracle used to freeze sentiment goldens.

Reads the bundled lexicon and rule files directly (no package imports) and
applies the pinned rule contract:

  per token: lexicon lookup -> booster adjustment (distance-damped,
  sign-following) -> single negation flip (any negation in the 3 preceding
  tokens, including n't contractions) -> all-caps emphasis (sign-following,
  only when the sentence mixes cases); then but-clause reweighting
  (pre x0.5, post x1.5); then the valence sum takes exclamation emphasis
  (0.292 per '!', capped at 4) sign-following; compound = s/sqrt(s^2+15).

pos/neg masses are (v+1) for v>0 and (1-v) for v<0, neutral mass counts
zero-valence tokens, the exclamation emphasis joins the winning mass, and
the three are normalized to ratios.

Kept deliberately flat (one function, explicit loops) so it shares no code
with the package implementation.
"""

import json
import re
from math import sqrt
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "src" / "agrisk" / "data"

TOKEN_RE = re.compile(r"\w+(?:['’-]\w+)*")


def load_tables():
    lexicon = {}
    with open(DATA / "sentiment_lexicon.tsv", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            token, valence = line.split("\t")
            lexicon[token] = float(valence)
    with open(DATA / "sentiment_rules.json", encoding="utf-8") as fh:
        rules = json.load(fh)
    return lexicon, rules["boosters"], set(rules["negations"]), rules["constants"]


def is_negation(token, negations):
    return token in negations or "n't" in token or "n’t" in token


def oracle_scores(text, lexicon, boosters, negations, c):
    tokens = TOKEN_RE.findall(text)
    uppers = [t.isupper() for t in tokens]
    cap_diff = any(uppers) and not all(uppers)

    valences = []
    for i, tok in enumerate(tokens):
        low = tok.lower()
        if low in boosters or low not in lexicon:
            valences.append(0.0)
            continue
        v = lexicon[low]
        for dist in (1, 2, 3):
            j = i - dist
            if j < 0:
                break
            b = boosters.get(tokens[j].lower())
            if b is not None:
                s = b if v > 0 else -b
                if dist == 2:
                    s *= c["booster_damp_dist2"]
                elif dist == 3:
                    s *= c["booster_damp_dist3"]
                v += s
        window = [tokens[j].lower() for j in range(max(0, i - c["negation_window"]), i)]
        if any(is_negation(w, negations) for w in window):
            v *= c["negation_scalar"]
        if cap_diff and tok.isupper():
            if v > 0:
                v += c["caps_incr"]
            elif v < 0:
                v -= c["caps_incr"]
        valences.append(v)

    lows = [t.lower() for t in tokens]
    if "but" in lows:
        bi = lows.index("but")
        valences = [
            v * c["but_before"] if i < bi else v * c["but_after"] if i > bi else v
            for i, v in enumerate(valences)
        ]

    ep = min(text.count("!"), c["max_exclamations"]) * c["exclamation_incr"]

    total = sum(valences)
    if total > 0:
        total += ep
    elif total < 0:
        total -= ep
    compound = total / sqrt(total * total + c["normalization_alpha"])

    pos = sum(v + 1.0 for v in valences if v > 0)
    neg = sum(v - 1.0 for v in valences if v < 0)
    neu = float(sum(1 for v in valences if v == 0))
    if pos > abs(neg):
        pos += ep
    elif pos < abs(neg):
        neg -= ep
    mass = pos + abs(neg) + neu
    if mass == 0:
        return {"pos": 0.0, "neg": 0.0, "neu": 1.0, "compound": 0.0}
    return {
        "pos": pos / mass,
        "neg": abs(neg) / mass,
        "neu": neu / mass,
        "compound": compound,
    }


if __name__ == "__main__":
    import sys

    lex, boost, negs, consts = load_tables()
    for line in sys.stdin:
        line = line.rstrip("\n")
        print(json.dumps({"sentence": line, **oracle_scores(line, lex, boost, negs, consts)}))
