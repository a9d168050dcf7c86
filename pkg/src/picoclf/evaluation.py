"""Binary-classification metrics, ROC curves, and stratified k-fold CV."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .corpus import TaskInstance
from .errors import ContractViolation, ValidationError

METRIC_NAMES = ("accuracy", "precision", "recall", "f1", "auc")


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    tn: int
    fn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


def confusion(pred: Sequence[int], truth: Sequence[int]) -> ConfusionMatrix:
    if len(pred) != len(truth):
        raise ContractViolation(
            f"prediction/truth length mismatch: {len(pred)} != {len(truth)}"
        )
    if len(pred) == 0:
        raise ContractViolation("cannot tally an empty prediction list")
    tp = fp = tn = fn = 0
    for p, t in zip(pred, truth):
        if t == 1:
            if p == 1:
                tp += 1
            else:
                fn += 1
        else:
            if p == 1:
                fp += 1
            else:
                tn += 1
    return ConfusionMatrix(tp=tp, fp=fp, tn=tn, fn=fn)


@dataclass(frozen=True)
class MetricsReport:
    accuracy: float
    precision: float
    recall: float
    f1: float
    degenerate: frozenset[str] = frozenset()

    def as_dict(self) -> dict[str, float]:
        return {
            "accuracy": self.accuracy,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
        }


def metrics(cm: ConfusionMatrix) -> MetricsReport:
    """Accuracy, precision, recall, F1; 0/0 ratios become 0 and are flagged."""
    if cm.total <= 0:
        raise ValidationError("confusion matrix is empty")
    degenerate: set[str] = set()
    if cm.tp + cm.fp > 0:
        precision = cm.tp / (cm.tp + cm.fp)
    else:
        precision = 0.0
        degenerate.add("precision")
    if cm.tp + cm.fn > 0:
        recall = cm.tp / (cm.tp + cm.fn)
    else:
        recall = 0.0
        degenerate.add("recall")
    if precision + recall > 0:
        f1 = 2 * precision * recall / (precision + recall)
    else:
        f1 = 0.0
        degenerate.add("f1")
    accuracy = (cm.tp + cm.tn) / cm.total
    return MetricsReport(
        accuracy=accuracy,
        precision=precision,
        recall=recall,
        f1=f1,
        degenerate=frozenset(degenerate),
    )


@dataclass(frozen=True)
class RocCurve:
    points: tuple[tuple[float, float], ...]
    auc: float

    def export(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for fpr, tpr in self.points:
                fh.write(f"{fpr!r}\t{tpr!r}\n")


def roc(scores: Sequence[float], truth: Sequence[int]) -> RocCurve:
    """Threshold sweep over the distinct scores, ties grouped.

    The curve starts at (0, 0), ends at (1, 1), and the AUC is the
    trapezoidal integral, which matches the count of correctly ordered
    (positive, negative) score pairs with ties worth one half.
    """
    if len(scores) != len(truth):
        raise ContractViolation(
            f"scores/truth length mismatch: {len(scores)} != {len(truth)}"
        )
    sc = np.asarray(scores, dtype=np.float64)
    tr = np.asarray(truth, dtype=np.int64)
    n_pos = int(np.sum(tr == 1))
    n_neg = int(np.sum(tr == 0))
    if n_pos == 0 or n_neg == 0:
        raise ValidationError("ROC needs both classes present in truth")

    order = np.argsort(-sc, kind="stable")
    points: list[tuple[float, float]] = [(0.0, 0.0)]
    tp = fp = 0
    i = 0
    n = len(sc)
    while i < n:
        j = i
        while j < n and sc[order[j]] == sc[order[i]]:
            if tr[order[j]] == 1:
                tp += 1
            else:
                fp += 1
            j += 1
        points.append((fp / n_neg, tp / n_pos))
        i = j
    auc = 0.0
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        auc += (x1 - x0) * (y1 + y0) / 2.0
    return RocCurve(points=tuple(points), auc=auc)


@dataclass(frozen=True)
class FoldResult:
    report: MetricsReport
    auc: float

    def metric(self, name: str) -> float:
        if name == "auc":
            return self.auc
        return self.report.as_dict()[name]


@dataclass(frozen=True)
class CvResult:
    folds: tuple[FoldResult, ...]
    mean: dict[str, float]
    std: dict[str, float]
    k: int
    seed: int


def stratified_fold_ids(
    labels: Sequence[int], k: int, seed: int
) -> np.ndarray:
    """Assign a fold id to each instance, class-balanced within 1.

    Each class is shuffled with a seeded generator and dealt round-robin
    over the k folds, so per-class fold sizes differ by at most one.
    """
    y = np.asarray(labels, dtype=np.int64)
    rng = np.random.default_rng(seed)
    fold = np.full(len(y), -1, dtype=np.int64)
    for cls in (0, 1):
        idx = np.flatnonzero(y == cls)
        if len(idx) == 0:
            continue
        order = rng.permutation(len(idx))
        for pos, which in enumerate(order):
            fold[idx[which]] = pos % k
    return fold


def kfold_cv(
    instances: Sequence[TaskInstance],
    k: int,
    seed: int,
    config: "PipelineConfig",
) -> CvResult:
    """Stratified k-fold cross-validation of the full pipeline.

    For every fold the vocabulary and the model are fitted on the other
    k-1 folds only; the held-out fold is scored with them. Metric means
    and standard deviations (population, ddof=0) are reported over folds.
    """
    from .pipeline import evaluate_on, fit_task  # local import, avoids cycle

    if k < 2:
        raise ValidationError(f"k must be >= 2, got {k}")
    labels = [inst.y for inst in instances]
    for cls in (0, 1):
        count = sum(1 for v in labels if v == cls)
        if count < k:
            raise ValidationError(
                f"class {cls} has only {count} instances, fewer than k={k}"
            )
    fold_ids = stratified_fold_ids(labels, k, seed)
    folds: list[FoldResult] = []
    for f in range(k):
        train_instances = [
            inst for inst, fid in zip(instances, fold_ids) if fid != f
        ]
        held_out = [inst for inst, fid in zip(instances, fold_ids) if fid == f]
        model = fit_task(train_instances, config)
        report, curve, _scores = evaluate_on(model, held_out, config.stoplist)
        folds.append(FoldResult(report=report, auc=curve.auc))
    mean = {
        name: sum(fr.metric(name) for fr in folds) / k for name in METRIC_NAMES
    }
    std = {
        name: math.sqrt(
            sum((fr.metric(name) - mean[name]) ** 2 for fr in folds) / k
        )
        for name in METRIC_NAMES
    }
    return CvResult(folds=tuple(folds), mean=mean, std=std, k=k, seed=seed)
