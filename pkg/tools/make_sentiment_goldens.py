"""Freeze sentence-level sentiment goldens from the independent oracle.

Run once; tests compare the package implementation against the emitted
JSON. Regenerate only when the lexicon, rules, or pinned contract change,
and record why in the commit message.
"""

import json
from pathlib import Path

from sentiment_oracle import load_tables, oracle_scores

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "sentiment_goldens.json"

# Coverage: plain hits, boosters at each distance, downtoners, negations
# (set members, n't and curly-apostrophe forms, window edges), caps
# emphasis both signs, all-caps no-op, but-clauses, exclamation counts,
# rule stacking, and zero-hit text.
SENTENCES = [
    "VADER is smart, handsome, and funny.",
    "VADER is smart.",
    "VADER is not smart.",
    "The harvest was good.",
    "The blight was bad.",
    "Farmers praised the new irrigation canal.",
    "Officials warned of crop losses after the drought.",
    "The market saw a strong recovery this quarter.",
    "Traders fear another price collapse.",
    "The cooperative welcomed the subsidy with relief.",
    "The seed program was very good.",
    "The outbreak was extremely bad.",
    "Yields were really quite good this season.",
    "The really big farm harvest improved.",
    "Prices were slightly better after the announcement.",
    "The loss was somewhat smaller than feared.",
    "Output was marginally higher despite the frost.",
    "The response was hardly adequate.",
    "The plan was barely acceptable to the union.",
    "The harvest was not good.",
    "The harvest was not very good.",
    "The scheme was never a success.",
    "The ruling wasn't fair to smallholders.",
    "The registry isn’t ready for farmers.",
    "Nobody could not admire the recovery effort.",
    "The ministry cannot ignore the damage.",
    "Rainfall did not fail the valley this year.",
    "The harvest was GREAT.",
    "The blight was TERRIBLE.",
    "THE HARVEST WAS GREAT.",
    "The outcome was not GREAT.",
    "The crop was good but prices collapsed.",
    "Prices collapsed but the cooperative survived.",
    "The yield improved but the debt remained a burden.",
    "But the harvest was good.",
    "The harvest was good but.",
    "What a great harvest!",
    "What a great harvest!!",
    "What a great harvest!!!",
    "What a great harvest!!!!",
    "What a great harvest!!!!!",
    "The locusts destroyed everything!",
    "The floods ruined the warehouse!!!",
    "The very happy traders cheered the deal!",
    "The news was VERY bad, honestly!",
    "The drought was terrible, but relief arrived quickly!",
    "It was not a disaster, but hardly a triumph either.",
    "The extremely generous grant was welcomed by every village.",
    "Banks praised the repayment record, yet warned of rising defaults.",
    "The strike disrupted exports and angered wholesale buyers.",
    "The canal brings water to the fields.",
    "Trucks moved grain along the new road.",
    "The committee met on Tuesday to review figures.",
    "12 500 tonnes were shipped in March.",
    "...",
    "Dr. Amara said the outlook was hopeful despite lingering volatility.",
]


def main() -> None:
    lexicon, boosters, negations, constants = load_tables()
    overlap = set(boosters) & negations
    assert not overlap, f"booster/negation overlap: {overlap}"
    assert not (set(boosters) & set(lexicon)), "booster words must not carry valence"

    records = []
    for sentence in SENTENCES:
        scores = oracle_scores(sentence, lexicon, boosters, negations, constants)
        total = scores["pos"] + scores["neg"] + scores["neu"]
        assert abs(total - 1.0) < 1e-9, (sentence, total)
        assert -1.0 <= scores["compound"] <= 1.0
        records.append({"sentence": sentence, **scores})

    assert len(records) >= 50
    assert round(records[0]["compound"], 4) == 0.8316, records[0]
    assert records[2]["compound"] < records[1]["compound"]
    assert records[len(SENTENCES) - 2]["neu"] == 1.0

    OUT.parent.mkdir(parents=True, exist_ok=True)
    with open(OUT, "w", encoding="utf-8") as fh:
        json.dump(records, fh, indent=1)
        fh.write("\n")
    print(f"wrote {len(records)} goldens to {OUT}")


if __name__ == "__main__":
    main()
