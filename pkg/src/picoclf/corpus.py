"""Labeled-sentence corpus: ingestion, filtering, binarization, splits.

Canonical input is a UTF-8 TSV with header ``pmid<TAB>heading<TAB>label
<TAB>text``, one sentence per line. Labels use the 7-tag scheme for
structured RCT abstracts; anything else is rejected at ingest (upstream
formats are adapted by the one-shot converter script, which owns all
label mapping).
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import ContractViolation, ParseError, ValidationError
from .textproc import Stoplist, remove_stopwords, tokenize

LABELS = ("P", "I", "O", "A", "M", "R", "C")
TASKS = ("P", "I", "O")
HEADER = "pmid\theading\tlabel\ttext"


@dataclass(frozen=True)
class LabeledSentence:
    """One abstract sentence with its structural label."""

    pmid: str
    heading: str
    label: str
    text: str

    def __post_init__(self) -> None:
        if self.label not in LABELS:
            raise ValidationError(f"unknown label token {self.label!r}")
        if not self.text.strip():
            raise ValidationError("sentence text is empty")


@dataclass(frozen=True)
class Corpus:
    sentences: tuple[LabeledSentence, ...]
    source: str = ""

    def __len__(self) -> int:
        return len(self.sentences)


@dataclass(frozen=True)
class TaskInstance:
    """A sentence binarized for one of the P/I/O tasks."""

    sentence: LabeledSentence
    task: str
    y: int

    def __post_init__(self) -> None:
        if self.task not in TASKS:
            raise ValidationError(f"task must be one of {TASKS}, got {self.task!r}")
        expected = 1 if self.sentence.label == self.task else 0
        if self.y != expected:
            raise ValidationError(
                f"label {self.sentence.label!r} with task {self.task!r} "
                f"requires y={expected}, got {self.y}"
            )


@dataclass(frozen=True)
class DataSplit:
    train: tuple[TaskInstance, ...]
    test: tuple[TaskInstance, ...]
    dev: tuple[TaskInstance, ...]
    seed: int
    ratios: tuple[float, float, float]

    def parts(self) -> dict[str, tuple[TaskInstance, ...]]:
        return {"train": self.train, "test": self.test, "dev": self.dev}


def ingest(path: str | Path) -> Corpus:
    """Read the canonical TSV corpus file, preserving sentence order."""
    path = Path(path)
    sentences: list[LabeledSentence] = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        header = fh.readline().rstrip("\n").rstrip("\r")
        if header != HEADER:
            raise ParseError(
                f"{path}: line 1: expected header {HEADER!r}, got {header!r}"
            )
        for lineno, raw in enumerate(fh, start=2):
            line = raw.rstrip("\n").rstrip("\r")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != 4:
                raise ParseError(
                    f"{path}: line {lineno}: expected 4 tab-separated fields, "
                    f"got {len(fields)}"
                )
            pmid, heading, label, text = fields
            if label not in LABELS:
                raise ValidationError(
                    f"{path}: line {lineno}: unknown label token {label!r}"
                )
            if not text.strip():
                raise ValidationError(f"{path}: line {lineno}: empty sentence text")
            sentences.append(
                LabeledSentence(pmid=pmid, heading=heading, label=label, text=text)
            )
    return Corpus(sentences=tuple(sentences), source=str(path))


def filter_pio(c: Corpus) -> Corpus:
    """Keep only P/I/O sentences, in their original order."""
    kept = tuple(s for s in c.sentences if s.label in TASKS)
    return Corpus(sentences=kept, source=c.source)


def binarize(c: Corpus, task: str) -> list[TaskInstance]:
    """One instance per sentence; y=1 iff the sentence label equals the task."""
    if task not in TASKS:
        raise ValidationError(f"task must be one of {TASKS}, got {task!r}")
    for s in c.sentences:
        if s.label not in TASKS:
            raise ContractViolation(
                f"binarize requires a P/I/O-filtered corpus; found label "
                f"{s.label!r} (pmid {s.pmid})"
            )
    return [
        TaskInstance(sentence=s, task=task, y=1 if s.label == task else 0)
        for s in c.sentences
    ]


def _largest_remainder(total: int, ratios: Sequence[float]) -> list[int]:
    """Integer allocation of ``total`` by ratio, off by at most 1 per part."""
    quotas = [r * total for r in ratios]
    base = [int(q) for q in quotas]
    short = total - sum(base)
    remainders = sorted(
        range(len(ratios)), key=lambda i: (-(quotas[i] - base[i]), i)
    )
    for i in remainders[:short]:
        base[i] += 1
    return base


def stratified_split(
    instances: Sequence[TaskInstance],
    ratios: Sequence[float],
    seed: int,
) -> DataSplit:
    """Partition instances into train/test/dev preserving class balance.

    Each class is shuffled independently with a seeded generator and cut
    by largest-remainder counts, so every (class, part) cell is within
    one instance of its exact quota and the result is deterministic for
    a fixed seed. Within each part the original instance order is kept.
    """
    ratios = tuple(float(r) for r in ratios)
    if len(ratios) != 3:
        raise ValidationError(f"expected 3 ratios, got {len(ratios)}")
    if any(r < 0 for r in ratios):
        raise ValidationError(f"ratios must be non-negative, got {ratios}")
    if abs(sum(ratios) - 1.0) > 1e-9:
        raise ValidationError(f"ratios must sum to 1, got sum {sum(ratios)!r}")
    if not instances:
        raise ValidationError("cannot split an empty instance list")

    rng = np.random.default_rng(seed)
    part_indices: tuple[list[int], list[int], list[int]] = ([], [], [])
    for cls in (0, 1):
        idx = [i for i, inst in enumerate(instances) if inst.y == cls]
        if not idx:
            continue
        order = rng.permutation(len(idx))
        shuffled = [idx[k] for k in order]
        counts = _largest_remainder(len(idx), ratios)
        start = 0
        for part, count in enumerate(counts):
            part_indices[part].extend(shuffled[start : start + count])
            start += count
    parts = tuple(
        tuple(instances[i] for i in sorted(chosen)) for chosen in part_indices
    )
    return DataSplit(
        train=parts[0], test=parts[1], dev=parts[2], seed=seed, ratios=ratios
    )


@dataclass(frozen=True)
class LabelCount:
    abstracts: int
    sentences: int


def corpus_stats(c: Corpus) -> dict[str, LabelCount]:
    """Per-label sentence counts and distinct-abstract (pmid) counts."""
    sent_counts: Counter[str] = Counter()
    pmids: dict[str, set[str]] = {label: set() for label in LABELS}
    for s in c.sentences:
        sent_counts[s.label] += 1
        pmids[s.label].add(s.pmid)
    return {
        label: LabelCount(abstracts=len(pmids[label]), sentences=sent_counts[label])
        for label in LABELS
    }


def top_k_words(
    c: Corpus, label: str, k: int, stoplist: Stoplist | frozenset[str]
) -> list[tuple[str, int]]:
    """Most frequent unigrams in sentences of one label.

    Tokens pass through the standard tokenizer and stop-word removal.
    Ties are broken lexicographically so the ranking is reproducible.
    """
    if label not in TASKS:
        raise ValidationError(f"label must be one of {TASKS}, got {label!r}")
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    counts: Counter[str] = Counter()
    for s in c.sentences:
        if s.label != label:
            continue
        counts.update(remove_stopwords(tokenize(s.text), stoplist).tokens)
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:k]


def corpus_digest(path: str | Path) -> str:
    """Content hash of a corpus file, for reproducibility headers."""
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def split_fingerprint(split: DataSplit) -> str:
    """Stable digest of part memberships, used to assert sweep isolation."""
    h = hashlib.sha256()
    for name, part in split.parts().items():
        for inst in part:
            s = inst.sentence
            h.update(
                f"{name}\t{s.pmid}\t{s.label}\t{s.text}\t{inst.y}\n".encode("utf-8")
            )
    return h.hexdigest()[:16]
