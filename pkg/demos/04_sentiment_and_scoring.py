# Sentiment rules, document compounds, and per-topic uncertainty scores.
#
# Each topic cluster gets a Sentiment Score (SS): the theta-weighted mean
# of its documents' compound sentiments. SS >= 0.05 reads as opportunity,
# SS <= -0.05 as risk, anything between as needs-context.

from agrisk.sentiment import ValenceLexicon, score_document, score_sentence

lexicon = ValenceLexicon.load()

# The sentence scorer is a rule pipeline over a word-valence lexicon:
# boosters, negation, ALL-CAPS emphasis, but-clause reweighting, and
# exclamation emphasis, folded into a compound score in [-1, 1].
examples = [
    "The harvest was good.",
    "The harvest was very good.",
    "The harvest was not good.",
    "The harvest was GOOD.",
    "The harvest was good!!",
    "The harvest was good, but the prices collapsed.",
]
print("rule pipeline on variations of one sentence:")
for text in examples:
    s = score_sentence(text, lexicon)
    print(f"  {text:<50} compound {s.compound:+.4f}")

# Document scores average the sentence compounds (combiner="mean"; the
# max_magnitude and length_weighted combiners are available too).
from agrisk.corpus import load_corpus
from agrisk.pipeline import DATA_DIR

corpus = load_corpus(DATA_DIR / "toy_corpus.csv")
compounds = {d.id: score_document(d, lexicon).compound for d in corpus}
ranked = sorted(compounds, key=compounds.get)
print("\nmost negative documents:")
for doc_id in ranked[:3]:
    print(f"  {doc_id}  {compounds[doc_id]:+.4f}  {corpus.get(doc_id).title}")
print("most positive documents:")
for doc_id in ranked[-3:]:
    print(f"  {doc_id}  {compounds[doc_id]:+.4f}  {corpus.get(doc_id).title}")

# Scoring needs a fitted model: documents cluster by their dominant topic
# (argmax of theta), and each cluster's compounds aggregate into the SS.
import numpy as np

from agrisk.preprocess import PreprocessConfig, preprocess_document
from agrisk.scoring import (
    classify_uncertainty,
    cluster_by_dominant_topic,
    score_report,
    topic_sentiment_score,
)
from agrisk.topics import fit_lda, top_words
from agrisk.vectorize import build_vocabulary, to_bow

config = PreprocessConfig()
processed = [preprocess_document(d, config) for d in corpus]
vocab = build_vocabulary(processed, min_df=2, max_df_ratio=0.90, max_terms=500)
model = fit_lda(to_bow(processed, vocab), vocab, K=6,
                iterations=400, burn_in=100, sample_every=5, rng_seed=0)

clusters = cluster_by_dominant_topic(model.theta)
print("\ncluster sizes by dominant topic:", [len(c) for c in clusters])

doc_compounds = np.array([compounds[d.id] for d in corpus])
ss0 = topic_sentiment_score(clusters[0], doc_compounds, model.theta, 0)
print(f"topic 0 SS: {ss0:+.4f} -> {classify_uncertainty(ss0)}")

# score_report assembles the full table the pipeline persists as report.json.
print("\nfull report:")
print(f"  {'topic':<6}{'SS':>9}  {'class':<15}{'docs':>5}  top words")
for row in score_report(model, doc_compounds):
    words = ", ".join(w for w, _ in top_words(model, row.topic, 4))
    print(f"  {row.topic:<6}{row.ss:>+9.4f}  {row.classification:<15}"
          f"{row.n_docs:>5}  {words}")

# Classification thresholds are inclusive and configurable; the defaults
# (+/-0.05) mirror common compound-score practice.
for value in (0.394084, 0.204868, 0.0038123, -0.2):
    print(f"\nclassify_uncertainty({value:+.6f}) = {classify_uncertainty(value)}", end="")
print()
