"""Versioned text artifact for trained models.

Layout: a magic+version line, tab-separated header fields, then a
vocabulary section (n-gram, index, df, idf per line), a weights section
(index, value per line, zeros omitted), the bias, and the converged
objective. Floats are serialized with repr() so load(save(m)) restores
them exactly and decisions are bit-identical. The in-memory objective
history is runtime metadata and is not persisted, so saving a loaded
model reproduces the file byte for byte.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import ParseError, ValidationError
from .svm import LinearModel, TrainingConfig
from .textproc import NGramRange
from .vectorizer import VocabEntry, Vocabulary

MAGIC = "picoclf-model"
FORMAT_VERSION = 1


def save_model(model: LinearModel, path: str | Path) -> None:
    if model.vocab is None:
        raise ValidationError("model has no vocabulary attached; cannot persist")
    vocab = model.vocab
    by_index = sorted(vocab.entries.items(), key=lambda kv: kv[1].index)
    nz = [(int(i), float(model.w[i])) for i in np.nonzero(model.w)[0]]
    cfg = model.config
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{MAGIC} {FORMAT_VERSION}\n")
        fh.write(f"task\t{cfg.task}\n")
        fh.write(f"ngram_range\t{vocab.range.label}\n")
        fh.write(f"c\t{cfg.c!r}\n")
        fh.write(f"tol\t{cfg.tol!r}\n")
        fh.write(f"max_epochs\t{cfg.max_epochs}\n")
        fh.write(f"seed\t{cfg.seed}\n")
        fh.write(f"normalize\t{1 if model.l2_normalize else 0}\n")
        fh.write(f"stoplist\t{vocab.stoplist_id}\n")
        fh.write(f"d_total\t{vocab.d_total}\n")
        fh.write(f"converged\t{1 if model.converged else 0}\n")
        fh.write(f"epochs\t{model.epochs}\n")
        fh.write(f"duality_gap\t{model.duality_gap!r}\n")
        fh.write(f"vocab\t{len(by_index)}\n")
        for gram, entry in by_index:
            fh.write(f"{gram}\t{entry.index}\t{entry.df}\t{entry.idf!r}\n")
        fh.write(f"weights\t{len(nz)}\n")
        for idx, val in nz:
            fh.write(f"{idx}\t{val!r}\n")
        fh.write(f"bias\t{model.b!r}\n")
        fh.write(f"objective\t{model.objective_at_convergence!r}\n")


def _expect(fields: list[str], key: str, count: int, lineno: int) -> list[str]:
    if len(fields) != count or fields[0] != key:
        raise ParseError(
            f"model artifact line {lineno}: expected {key!r} with "
            f"{count - 1} value(s), got {fields!r}"
        )
    return fields[1:]


def load_model(path: str | Path) -> LinearModel:
    path = Path(path)
    with open(path, "r", encoding="utf-8", newline="") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ParseError(f"{path}: empty model artifact")
    magic = lines[0].split(" ")
    if len(magic) != 2 or magic[0] != MAGIC:
        raise ParseError(f"{path}: not a model artifact (bad magic line)")
    version = magic[1]
    if version != str(FORMAT_VERSION):
        raise ValidationError(
            f"{path}: artifact format version {version} is not supported; "
            f"this build reads version {FORMAT_VERSION}"
        )

    rows = [line.split("\t") for line in lines[1:]]
    pos = 0

    def take(key: str, count: int = 2) -> list[str]:
        nonlocal pos
        values = _expect(rows[pos], key, count, pos + 2)
        pos += 1
        return values

    task = take("task")[0]
    ngram_range = NGramRange.parse(take("ngram_range")[0])
    c = float(take("c")[0])
    tol = float(take("tol")[0])
    max_epochs = int(take("max_epochs")[0])
    seed = int(take("seed")[0])
    normalize = take("normalize")[0] == "1"
    stoplist_id = take("stoplist")[0]
    d_total = int(take("d_total")[0])
    converged = take("converged")[0] == "1"
    epochs = int(take("epochs")[0])
    duality_gap = float(take("duality_gap")[0])

    n_vocab = int(take("vocab")[0])
    entries: dict[str, VocabEntry] = {}
    for k in range(n_vocab):
        fields = rows[pos]
        pos += 1
        if len(fields) != 4:
            raise ParseError(
                f"{path}: vocab line {pos + 1}: expected 4 fields, got {len(fields)}"
            )
        gram, index, df, idf = fields
        entries[gram] = VocabEntry(index=int(index), df=int(df), idf=float(idf))
    vocab = Vocabulary(
        entries=entries, d_total=d_total, range=ngram_range, stoplist_id=stoplist_id
    )

    n_weights = int(take("weights")[0])
    w = np.zeros(len(entries), dtype=np.float64)
    for k in range(n_weights):
        fields = rows[pos]
        pos += 1
        if len(fields) != 2:
            raise ParseError(
                f"{path}: weight line {pos + 1}: expected 2 fields, got {len(fields)}"
            )
        w[int(fields[0])] = float(fields[1])

    bias = float(take("bias")[0])
    obj = float(take("objective")[0])

    cfg = TrainingConfig(c=c, tol=tol, max_epochs=max_epochs, seed=seed, task=task)
    return LinearModel(
        w=w,
        b=bias,
        config=cfg,
        objective_at_convergence=obj,
        converged=converged,
        epochs=epochs,
        duality_gap=duality_gap,
        objective_history=(),
        vocab=vocab,
        l2_normalize=normalize,
    )
