"""TF-IDF vectorization over an n-gram vocabulary.

A vocabulary is fitted on stop-word-filtered training sentences only.
Term frequency is the n-gram count divided by the total n-gram count of
the sentence; inverse document frequency is ln(d_total / (df + 1)) with
the +1 applied unconditionally, so n-grams present in every sentence get
a negative idf and are kept as-is rather than clamped.

Out-of-vocabulary n-grams produce no component but still inflate the
term-frequency denominator, because the denominator sums over all
n-grams occurring in the sentence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from .errors import ContractViolation, ValidationError
from .textproc import NGramBag, NGramRange, TokenSequence, ngrams


class VocabEntry(NamedTuple):
    index: int
    df: int
    idf: float


@dataclass(frozen=True)
class VectorizerConfig:
    """Feature-extraction knobs shared by fit and transform."""

    ngram_range: NGramRange
    min_df: int = 1
    smooth_idf: bool = True  # ln(d/(df+1)); False gives the literal ln(d/df)
    l2_normalize: bool = True

    def __post_init__(self) -> None:
        if self.min_df < 1:
            raise ValidationError(f"min_df must be >= 1, got {self.min_df}")


@dataclass(frozen=True)
class Vocabulary:
    """n-gram -> (index, df, idf) map fitted on a training corpus.

    Indices form a bijection onto 0..len(entries)-1 in lexicographic
    n-gram order, so refitting the same corpus reproduces the same
    assignment without any seed.
    """

    entries: dict[str, VocabEntry]
    d_total: int
    range: NGramRange
    stoplist_id: str

    @property
    def size(self) -> int:
        return len(self.entries)

    def export_idf(self, path: str | Path) -> None:
        """Write a two-column (n-gram, idf) text file for inspection."""
        lines = sorted(self.entries.items(), key=lambda kv: kv[1].index)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for gram, entry in lines:
                fh.write(f"{gram}\t{entry.idf!r}\n")


def fit(
    sentences: Sequence[TokenSequence],
    ngram_range: NGramRange,
    *,
    min_df: int = 1,
    smooth_idf: bool = True,
    stoplist_id: str = "",
) -> Vocabulary:
    """Fit a vocabulary with document frequencies over training sentences.

    ``sentences`` must already be stop-word filtered. ``df`` counts the
    number of distinct sentences containing the n-gram at least once.
    """
    if not sentences:
        raise ValidationError("cannot fit a vocabulary on an empty corpus")
    if min_df < 1:
        raise ValidationError(f"min_df must be >= 1, got {min_df}")
    df: dict[str, int] = {}
    for sent in sentences:
        for gram in ngrams(sent, ngram_range).counts:
            df[gram] = df.get(gram, 0) + 1
    d_total = len(sentences)
    entries: dict[str, VocabEntry] = {}
    index = 0
    for gram in sorted(df):
        count = df[gram]
        if count < min_df:
            continue
        denom = count + 1 if smooth_idf else count
        entries[gram] = VocabEntry(index=index, df=count, idf=math.log(d_total / denom))
        index += 1
    return Vocabulary(
        entries=entries, d_total=d_total, range=ngram_range, stoplist_id=stoplist_id
    )


def term_frequencies(bag: NGramBag) -> dict[str, float]:
    """Relative frequency of each n-gram within the sentence's bag."""
    total = bag.total
    if total == 0:
        return {}
    return {gram: count / total for gram, count in bag.counts.items()}


@dataclass(frozen=True)
class SparseVector:
    """Sparse tf-idf representation of one sentence.

    Exact zeros are never stored; iteration over ``components`` in sorted
    index order is the canonical accumulation order everywhere a dot
    product or norm is taken, which keeps results bit-reproducible.
    """

    components: dict[int, float]
    dim: int

    def norm(self) -> float:
        acc = 0.0
        for idx in sorted(self.components):
            v = self.components[idx]
            acc += v * v
        return math.sqrt(acc)

    def sorted_items(self) -> list[tuple[int, float]]:
        return sorted(self.components.items())


def transform(bag: NGramBag, v: Vocabulary, *, l2_normalize: bool = True) -> SparseVector:
    """Map a sentence bag to tf * idf weights over the vocabulary.

    Out-of-vocabulary n-grams contribute nothing but count in the tf
    denominator. With normalization on, any non-empty result has unit
    Euclidean norm.
    """
    if bag.range != v.range:
        raise ContractViolation(
            f"bag built with range {bag.range.label} but vocabulary uses "
            f"{v.range.label}"
        )
    total = bag.total
    components: dict[int, float] = {}
    if total > 0:
        for gram in sorted(bag.counts):
            entry = v.entries.get(gram)
            if entry is None:
                continue
            weight = (bag.counts[gram] / total) * entry.idf
            if weight != 0.0:
                components[entry.index] = weight
    vec = SparseVector(components=components, dim=v.size)
    if l2_normalize and components:
        nrm = vec.norm()
        if nrm > 0.0:
            components = {i: w / nrm for i, w in vec.sorted_items()}
            vec = SparseVector(components=components, dim=v.size)
    return vec


def transform_many(
    bags: Iterable[NGramBag], v: Vocabulary, *, l2_normalize: bool = True
) -> list[SparseVector]:
    return [transform(bag, v, l2_normalize=l2_normalize) for bag in bags]
