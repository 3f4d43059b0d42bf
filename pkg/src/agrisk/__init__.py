"""Agricultural news risk analytics: topics, sentiment, scoring, QA.

The package turns a dated news corpus into a ranked table of
"uncertainties": latent topics fitted by collapsed Gibbs LDA (plain,
TF-IDF-weighted, or seed-guided), scored for risk/opportunity polarity by
aggregating rule-based sentence sentiment over dominant-topic document
clusters, and validated through extractive question answering.
"""

from importlib.metadata import PackageNotFoundError, version

from .corpus import Corpus, Document, dumps_corpus, filter_by_date, load_corpus, save_corpus
from .errors import (
    DuplicateIdError,
    EmptySeedSetError,
    EmptyVocabularyError,
    PipelineStageError,
    RowValidationError,
    SchemaError,
    SpanIntegrityError,
    TransportError,
)
from .pipeline import PipelineConfig, RunArtifacts, run_pipeline, run_stage
from .preprocess import (
    Lemmatizer,
    PreprocessConfig,
    ProcessedDocument,
    lemmatize,
    normalize_case,
    preprocess_document,
    preprocess_text,
    remove_noise,
    segment_sentences,
    tokenize,
)
from .qa import (
    EvaluationRecord,
    QAAnswer,
    QAQuery,
    answer_baseline,
    answer_remote,
    evaluate_uncertainty,
    formulate_question,
)
from .scoring import (
    TopicScore,
    classify_uncertainty,
    cluster_by_dominant_topic,
    score_report,
    topic_sentiment_score,
)
from .sentiment import (
    RuleConstants,
    SentimentScores,
    ValenceLexicon,
    normalize_compound,
    score_document,
    score_sentence,
)
from .topics import (
    GibbsCounts,
    RiskLexicon,
    SeedSet,
    TopicModel,
    build_seed_set,
    conditional_distribution,
    dominant_topic,
    fit_guided_lda,
    fit_lda,
    top_words,
    umass_coherence,
)
from .vectorize import (
    DocTermMatrix,
    Vocabulary,
    build_vocabulary,
    idf_weights,
    tfidf_transform,
    to_bow,
    top_terms_by_tfidf,
)

try:
    __version__ = version("agrisk")
except PackageNotFoundError:  # pragma: no cover - source tree without install
    __version__ = "0.0.0"
