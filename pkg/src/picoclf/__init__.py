"""Sentence-level P/I/O classification of RCT abstracts.

The pipeline ingests labeled abstract sentences, builds stop-word
filtered n-gram tf-idf features, and trains one independent soft-margin
linear SVM per element (P, I, O). Modules:

- corpus:     ingestion, filtering, binarization, stratified splits, stats
- textproc:   tokenizer, stop-word removal, n-gram bags
- vectorizer: vocabulary fitting and sparse tf-idf transforms
- svm:        the dual solver, decision/predict/objective
- evaluation: confusion/metrics, ROC/AUC, stratified k-fold CV
- pipeline:   per-task orchestration (featurize, fit, score, multitask)
- model_io:   versioned text artifacts with exact round-tripping
- cli:        stats / train / sweep-ngram / sweep-c / predict / eval-cv
"""

__version__ = "0.1.0"

from .corpus import (
    Corpus,
    DataSplit,
    LabeledSentence,
    TaskInstance,
    binarize,
    corpus_stats,
    filter_pio,
    ingest,
    stratified_split,
    top_k_words,
)
from .errors import (
    ConfigError,
    ContractViolation,
    ParseError,
    PicoError,
    ValidationError,
)
from .evaluation import ConfusionMatrix, CvResult, RocCurve, confusion, kfold_cv, metrics, roc
from .model_io import load_model, save_model
from .pipeline import PipelineConfig, fit_task, train_multitask
from .svm import LinearModel, SlackSummary, TrainingConfig, decision, objective, predict, train
from .textproc import (
    NGramBag,
    NGramRange,
    Stoplist,
    TokenSequence,
    load_stopwords,
    ngrams,
    remove_stopwords,
    tokenize,
)
from .vectorizer import SparseVector, Vocabulary, fit, term_frequencies, transform

__all__ = [
    "__version__",
    "Corpus",
    "DataSplit",
    "LabeledSentence",
    "TaskInstance",
    "binarize",
    "corpus_stats",
    "filter_pio",
    "ingest",
    "stratified_split",
    "top_k_words",
    "ConfigError",
    "ContractViolation",
    "ParseError",
    "PicoError",
    "ValidationError",
    "ConfusionMatrix",
    "CvResult",
    "RocCurve",
    "confusion",
    "kfold_cv",
    "metrics",
    "roc",
    "load_model",
    "save_model",
    "PipelineConfig",
    "fit_task",
    "train_multitask",
    "LinearModel",
    "SlackSummary",
    "TrainingConfig",
    "decision",
    "objective",
    "predict",
    "train",
    "NGramBag",
    "NGramRange",
    "Stoplist",
    "TokenSequence",
    "load_stopwords",
    "ngrams",
    "remove_stopwords",
    "tokenize",
    "SparseVector",
    "Vocabulary",
    "fit",
    "term_frequencies",
    "transform",
]
