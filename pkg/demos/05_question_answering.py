"""
Validating topics with extractive QA
====================================

"""

# After scoring, the analyst cross-examines each uncertainty: turn the
# topic's top words into a question, ask it of a strongly-associated
# document, and read the answer span in context. A sensible span supports
# the topic reading; a degenerate one flags it for review.

import numpy as np

from agrisk.corpus import load_corpus
from agrisk.pipeline import DATA_DIR
from agrisk.preprocess import PreprocessConfig, preprocess_document
from agrisk.qa import QAQuery, answer_baseline, evaluate_uncertainty, formulate_question
from agrisk.scoring import cluster_by_dominant_topic, topic_sentiment_score
from agrisk.sentiment import ValenceLexicon, score_document
from agrisk.topics import fit_lda, top_words
from agrisk.vectorize import build_vocabulary, to_bow

corpus = load_corpus(DATA_DIR / "toy_corpus.csv")
config = PreprocessConfig()
processed = [preprocess_document(d, config) for d in corpus]
vocab = build_vocabulary(processed, min_df=2, max_df_ratio=0.90, max_terms=500)
model = fit_lda(to_bow(processed, vocab), vocab, K=6,
                iterations=400, burn_in=100, sample_every=5, rng_seed=0)

# Questions come from the topic-term distribution: the top words fill a
# fixed template, so the question itself is reproducible from the model.
topic = 0
words = [w for w, _ in top_words(model, topic, 3)]
question = formulate_question(words)
print(f"topic {topic} top words: {words}")
print(f"question: {question}")

# The baseline scorer searches every span up to 30 tokens and picks the
# one covering the most question terms (idf-weighted, minus a length
# penalty). Ties resolve earliest-then-shortest.
doc = list(corpus)[int(np.argmax(model.theta[:, topic]))]
answer = answer_baseline(QAQuery(context=doc.content, question=question))
print(f"\nasking {doc.id} ({doc.title!r}):")
print(f"  answer: {answer.text!r}")
print(f"  token span [{answer.start}, {answer.end}), score {answer.score:.4f}, "
      f"low confidence: {answer.low_confidence}")

# The span is verbatim text from the context, never a paraphrase.
print(f"  verbatim: {answer.text in doc.content}")

# When no question term appears in the context, the scorer still returns
# the best (least-penalized) span but flags it.
nonsense = answer_baseline(QAQuery(context=doc.content, question="what about zeppelins?"))
print(f"\nunanswerable question -> low confidence {nonsense.low_confidence}, "
      f"span {nonsense.text!r}, score {nonsense.score:.3f}")

# evaluate_uncertainty packages the whole loop for one topic: it picks the
# highest-theta document in the topic's cluster, formulates the question,
# answers it, and records everything alongside the topic's SS.
lexicon = ValenceLexicon.load()
compounds = np.array([score_document(d, lexicon).compound for d in corpus])
clusters = cluster_by_dominant_topic(model.theta)
ss = topic_sentiment_score(clusters[topic], compounds, model.theta, topic)

record = evaluate_uncertainty(corpus, model, topic, ss)
print(f"\nevaluation record for topic {topic}:")
for key, value in record.to_dict().items():
    print(f"  {key}: {value}")

# A remote scorer (HTTP endpoint with the {context, question} contract)
# can replace the baseline: evaluate_uncertainty(..., scorer="remote",
# remote_url=...) falls back to the baseline, with the reason recorded in
# the provenance field, whenever the endpoint is unreachable.
