"""End-to-end glue: instances -> features -> model -> scores.

Each of the three binary tasks (P, I, O) gets its own vocabulary fitted
on that task's training sentences only, and its own model; nothing is
shared across tasks, so they may train in parallel if desired.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

import numpy as np

from . import svm, vectorizer
from .corpus import TASKS, DataSplit, TaskInstance
from .errors import ValidationError
from .evaluation import MetricsReport, RocCurve, confusion, metrics, roc
from .textproc import NGramRange, Stoplist, load_stopwords, ngrams, remove_stopwords, tokenize
from .vectorizer import SparseVector, Vocabulary

DEFAULT_C = {"P": 1.0, "I": 1.0, "O": 0.6}


@dataclass(frozen=True)
class PipelineConfig:
    """Everything one task's train/evaluate run depends on."""

    ngram_range: NGramRange
    c: float = 1.0
    tol: float = 1e-6
    max_epochs: int = 1000
    seed: int = 0
    l2_normalize: bool = True
    min_df: int = 1
    smooth_idf: bool = True
    task: str = "P"
    stoplist: Stoplist = field(default_factory=load_stopwords)


def filtered_tokens(text: str, stoplist: Stoplist) -> "vectorizer.TokenSequence":
    return remove_stopwords(tokenize(text), stoplist)


def instance_bags(
    instances: Sequence[TaskInstance], ngram_range: NGramRange, stoplist: Stoplist
):
    return [
        ngrams(filtered_tokens(inst.sentence.text, stoplist), ngram_range)
        for inst in instances
    ]


def instance_vectors(
    instances: Sequence[TaskInstance], vocab: Vocabulary, stoplist: Stoplist,
    l2_normalize: bool,
) -> list[SparseVector]:
    bags = instance_bags(instances, vocab.range, stoplist)
    return vectorizer.transform_many(bags, vocab, l2_normalize=l2_normalize)


def signed_labels(instances: Sequence[TaskInstance]) -> np.ndarray:
    """Map the corpus-level {1, 0} labels onto the solver's +1/-1."""
    return np.asarray([1.0 if inst.y == 1 else -1.0 for inst in instances])


def fit_task(
    train_instances: Sequence[TaskInstance], config: PipelineConfig
) -> svm.LinearModel:
    """Fit vocabulary and model on one task's training instances."""
    if not train_instances:
        raise ValidationError("cannot fit a task on zero training instances")
    sentences = [
        filtered_tokens(inst.sentence.text, config.stoplist)
        for inst in train_instances
    ]
    vocab = vectorizer.fit(
        sentences,
        config.ngram_range,
        min_df=config.min_df,
        smooth_idf=config.smooth_idf,
        stoplist_id=config.stoplist.source_id,
    )
    bags = [ngrams(s, config.ngram_range) for s in sentences]
    vectors = vectorizer.transform_many(bags, vocab, l2_normalize=config.l2_normalize)
    cfg = svm.TrainingConfig(
        c=config.c,
        tol=config.tol,
        max_epochs=config.max_epochs,
        seed=config.seed,
        task=config.task,
    )
    model = svm.train(vectors, signed_labels(train_instances), cfg)
    return model.with_vocab(vocab, config.l2_normalize)


def score_instances(
    model: svm.LinearModel, instances: Sequence[TaskInstance], stoplist: Stoplist
) -> np.ndarray:
    if model.vocab is None:
        raise ValidationError("model has no vocabulary attached")
    vectors = instance_vectors(instances, model.vocab, stoplist, model.l2_normalize)
    return svm.decision_many(model, vectors)


def evaluate_on(
    model: svm.LinearModel, instances: Sequence[TaskInstance], stoplist: Stoplist
) -> tuple[MetricsReport, RocCurve, np.ndarray]:
    """Metrics and ROC of a model over labeled instances."""
    scores = score_instances(model, instances, stoplist)
    preds = [1 if s >= 0.0 else 0 for s in scores]
    truth = [inst.y for inst in instances]
    report = metrics(confusion(preds, truth))
    curve = roc(scores, truth)
    return report, curve, scores


def train_multitask(
    splits: Mapping[str, DataSplit],
    config: PipelineConfig,
    per_task_c: Mapping[str, float] | None = None,
) -> dict[str, svm.LinearModel]:
    """Fit one independent (vocabulary, model) pair per requested task."""
    if per_task_c is None:
        per_task_c = DEFAULT_C
    models: dict[str, svm.LinearModel] = {}
    for task in sorted(splits, key=TASKS.index):
        task_cfg = replace(
            config, task=task, c=per_task_c.get(task, config.c)
        )
        models[task] = fit_task(list(splits[task].train), task_cfg)
    return models
