"""Independent brute-force oracles used by the test suite.

Everything here recomputes expected values from first principles with
naive loops or exhaustive enumeration, sharing no code with the package
paths it checks.
"""

from __future__ import annotations

import math

import numpy as np


# ---------------------------------------------------------------------------
# tf-idf


def enumerate_ngrams(tokens: list[str], n_min: int, n_max: int) -> list[str]:
    out = []
    for n in range(n_min, n_max + 1):
        for i in range(len(tokens) - n + 1):
            out.append(" ".join(tokens[i : i + n]))
    return out


def naive_tfidf(
    corpus_tokens: list[list[str]],
    sentence_tokens: list[str],
    n_min: int,
    n_max: int,
    *,
    smooth: bool = True,
    min_df: int = 1,
) -> dict[str, float]:
    """Recompute tf*idf for one sentence with nested loops.

    The vocabulary is every n-gram of the corpus with document frequency
    at least min_df; idf uses ln(D / (df + 1)) when smooth else
    ln(D / df); tf divides by the total n-gram count of the sentence,
    including out-of-vocabulary n-grams.
    """
    d_total = len(corpus_tokens)
    vocab: set[str] = set()
    for toks in corpus_tokens:
        vocab.update(enumerate_ngrams(toks, n_min, n_max))

    grams = enumerate_ngrams(sentence_tokens, n_min, n_max)
    total = len(grams)
    values: dict[str, float] = {}
    for gram in set(grams):
        if gram not in vocab:
            continue
        df = 0
        for toks in corpus_tokens:
            if gram in enumerate_ngrams(toks, n_min, n_max):
                df += 1
        if df < min_df:
            continue
        count = sum(1 for g in grams if g == gram)
        tf = count / total
        idf = math.log(d_total / (df + 1 if smooth else df))
        value = tf * idf
        if value != 0.0:
            values[gram] = value
    return values


# ---------------------------------------------------------------------------
# SVM


def hinge_objective(
    X: np.ndarray, y: np.ndarray, w: np.ndarray, b: float, c: float
) -> float:
    total = 0.5 * float(w @ w)
    for i in range(len(y)):
        total += c * max(0.0, 1.0 - y[i] * (float(X[i] @ w) + b))
    return total


def best_bias_for(X: np.ndarray, y: np.ndarray, w: np.ndarray, c: float) -> float:
    """Exact 1-D minimization over b by scanning all hinge breakpoints."""
    margins = X @ w
    candidates = [float(y[i] - margins[i]) for i in range(len(y))]
    best_b, best_f = candidates[0], hinge_objective(X, y, w, candidates[0], c)
    for b in candidates[1:]:
        f = hinge_objective(X, y, w, b, c)
        if f < best_f:
            best_b, best_f = b, f
    return best_b


def kkt_enumeration_oracle(
    X: np.ndarray, y: np.ndarray, c: float
) -> tuple[float, np.ndarray, float]:
    """Optimal hinge objective by enumerating dual active sets.

    Every point is assigned to one of three states: zero multiplier,
    on-margin (multiplier free, margin pinned to 1), or bound (multiplier
    at C). For each of the 3^n assignments, the linear KKT system in the
    on-margin multipliers and the bias is solved and the primal objective
    of the resulting candidate (w, b) is evaluated; the candidate bias is
    re-optimized exactly given w, which can only lower the objective.
    Candidates are honest upper bounds, and the assignment realized by
    the true optimum reproduces it exactly, so the minimum over all
    assignments is the optimum.
    """
    n, d = X.shape
    gram = X @ X.T
    best_f = math.inf
    best_w = np.zeros(d)
    best_b = 0.0

    for mask in range(3**n):
        states = []
        rem = mask
        for _ in range(n):
            states.append(rem % 3)  # 0 zero, 1 on-margin, 2 at bound C
            rem //= 3
        margin_idx = [i for i in range(n) if states[i] == 1]
        bound_idx = [i for i in range(n) if states[i] == 2]

        base = np.zeros(d)
        for v in bound_idx:
            base += c * y[v] * X[v]

        m = len(margin_idx)
        if m == 0:
            # w fixed by the bound set; constraint must hold on its own
            if abs(sum(y[v] for v in bound_idx)) > 1e-12 and bound_idx:
                continue
            if bound_idx or not margin_idx:
                w = base
                b = best_bias_for(X, y, w, c)
                f = hinge_objective(X, y, w, b, c)
                if f < best_f:
                    best_f, best_w, best_b = f, w.copy(), b
            continue

        a = np.zeros((m + 1, m + 1))
        rhs = np.zeros(m + 1)
        for r, i in enumerate(margin_idx):
            for col, j in enumerate(margin_idx):
                a[r, col] = y[j] * gram[j, i]
            a[r, m] = 1.0
            rhs[r] = y[i] - sum(c * y[v] * gram[v, i] for v in bound_idx)
        for col, j in enumerate(margin_idx):
            a[m, col] = y[j]
        rhs[m] = -sum(c * y[v] for v in bound_idx)

        try:
            sol, *_ = np.linalg.lstsq(a, rhs, rcond=None)
        except np.linalg.LinAlgError:
            continue
        beta = sol[:m]
        w = base.copy()
        for col, j in enumerate(margin_idx):
            w += beta[col] * y[j] * X[j]
        b = float(sol[m])
        f = hinge_objective(X, y, w, b, c)
        b2 = best_bias_for(X, y, w, c)
        f2 = hinge_objective(X, y, w, b2, c)
        if f2 < f:
            f, b = f2, b2
        if f < best_f:
            best_f, best_w, best_b = f, w.copy(), b
    return best_f, best_w, best_b


def grid_oracle_1d(
    x: np.ndarray, y: np.ndarray, c: float, lo: float = -3.0, hi: float = 3.0,
    step: float = 1e-3,
) -> float:
    """Minimum objective over a dense (w, b) grid for 1-D data."""
    ws = np.arange(lo, hi + step / 2, step)
    bs = np.arange(lo, hi + step / 2, step)
    best = math.inf
    chunk = 512
    for start in range(0, len(bs), chunk):
        bb = bs[start : start + chunk]
        f = 0.5 * ws[:, None] ** 2 + np.zeros((len(ws), len(bb)))
        for i in range(len(y)):
            margin = y[i] * (ws[:, None] * x[i] + bb[None, :])
            f += c * np.maximum(0.0, 1.0 - margin)
        best = min(best, float(f.min()))
    return best


# ---------------------------------------------------------------------------
# metrics


def hand_tally(pred: list[int], truth: list[int]) -> tuple[int, int, int, int]:
    tp = fp = tn = fn = 0
    for p, t in zip(pred, truth):
        if p == 1 and t == 1:
            tp += 1
        elif p == 1 and t == 0:
            fp += 1
        elif p == 0 and t == 0:
            tn += 1
        else:
            fn += 1
    return tp, fp, tn, fn


def pair_count_auc(scores: list[float], truth: list[int]) -> float:
    """AUC as the fraction of correctly ordered (pos, neg) pairs."""
    pos = [s for s, t in zip(scores, truth) if t == 1]
    neg = [s for s, t in zip(scores, truth) if t == 0]
    total = len(pos) * len(neg)
    acc = 0.0
    for sp in pos:
        for sn in neg:
            if sp > sn:
                acc += 1.0
            elif sp == sn:
                acc += 0.5
    return acc / total
