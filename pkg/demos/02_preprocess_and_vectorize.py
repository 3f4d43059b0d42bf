# From raw articles to a document-term matrix.
#
# Every downstream stage (topic fitting, scoring, QA) works on normalized
# tokens, so this walk-through shows each preprocessing step on real text
# before assembling the corpus-wide matrix.

from agrisk.corpus import load_corpus
from agrisk.pipeline import DATA_DIR
from agrisk.preprocess import (
    PreprocessConfig,
    preprocess_document,
    preprocess_text,
    segment_sentences,
    tokenize,
)

corpus = load_corpus(DATA_DIR / "toy_corpus.csv")
doc = corpus.get("doc05")
print("raw text:")
print(" ", doc.content[:160], "...")

# Sentence segmentation respects abbreviations (Dr., U.S.) and only splits
# where a terminator is followed by a capitalized sentence start.
sentences = segment_sentences(doc.content)
print(f"\n{len(sentences)} sentences; first two:")
for s in sentences[:2]:
    print(" -", s)

# Tokenization keeps hyphenated compounds and internal apostrophes whole.
print("\ntokens of the first sentence:")
print(" ", tokenize(sentences[0].lower()))

# The full chain lowercases, tokenizes, lemmatizes (bundled inflection
# table first, suffix rules as fallback) and drops stopwords and noise.
config = PreprocessConfig()
print("\nnormalized tokens:")
print(" ", preprocess_text("This drought worsened. Prices fell.", config))

processed = [preprocess_document(d, config) for d in corpus]
print(f"\npreprocessed {len(processed)} documents; doc05 keeps "
      f"{len(processed[5].tokens)} tokens of {len(tokenize(doc.content))} raw")

# Vocabulary filtering: document frequency bounds first, then the top
# max_terms by corpus frequency (ties break alphabetically).
from agrisk.vectorize import build_vocabulary, to_bow, tfidf_transform, top_terms_by_tfidf

vocab = build_vocabulary(processed, min_df=2, max_df_ratio=0.90, max_terms=500)
print(f"\nvocabulary: {len(vocab)} terms")
print("  most document-frequent:",
      sorted(vocab.df, key=vocab.df.get, reverse=True)[:8])

# The bag-of-words matrix is sparse: each row lists (term id, count).
counts = to_bow(processed, vocab)
row = counts.rows[5]
print(f"\nbow row for doc05: {len(row)} distinct terms, "
      f"{counts.token_totals[5]} tokens total")
print("  first entries:", [(vocab.terms[t], c) for t, c in row[:6]])

# TF-IDF reweights the same sparsity pattern and L2-normalizes each row,
# which is the input the tfidf topic-model variant samples from.
tfidf = tfidf_transform(counts, vocab)
weights = dict(tfidf.rows[5])
print("\ntop tfidf terms of doc05:")
for tid in sorted(weights, key=weights.get, reverse=True)[:5]:
    print(f"  {vocab.terms[tid]:<14} {weights[tid]:.3f}")

print("\ntop corpus-wide tfidf terms:")
for term, weight in top_terms_by_tfidf(tfidf, vocab, 8):
    print(f"  {term:<14} {weight:.3f}")
