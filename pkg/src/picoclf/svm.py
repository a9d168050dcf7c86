"""Soft-margin linear SVM trained in the dual, with an unregularized bias.

The training objective is the unconstrained hinge form

    F(w, b) = 0.5 * ||w||^2 + C * sum_i max(0, 1 - y_i * (w.x_i + b))

which is equivalent to the slack-variable formulation because, for fixed
(w, b), the smallest feasible slack of instance i is exactly the hinge
value. The solver maximizes the dual

    D(alpha) = sum(alpha) - 0.5 * ||sum_i alpha_i y_i x_i||^2,
    0 <= alpha_i <= C,  sum_i y_i alpha_i = 0

using exact two-variable ascent steps that preserve the equality
constraint (the constraint exists because b is not regularized). Each
epoch performs one maximal-violating-pair step followed by a full pass
over a seeded random pairing of all instances, then recomputes w from
alpha, sets b to the exact minimizer of F(w, .), and evaluates F.

The model kept and reported is the best primal iterate so far, which
makes the per-epoch objective history non-increasing by construction.
Convergence is certified by the duality gap: once

    F_best - D(alpha) <= tol * (1 + |F_best|)

weak duality (D(alpha) <= optimum <= F_best) guarantees the returned
objective is within tol * (1 + |optimum|) of the true optimum. Hitting
max_epochs first yields a model flagged non-converged, carrying the
best objective seen.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from ._solver import margins, pair_pass, row_sq_norms, weights_from_alpha
from .corpus import TASKS
from .errors import ContractViolation, ValidationError
from .vectorizer import SparseVector, Vocabulary


@dataclass(frozen=True)
class TrainingConfig:
    c: float
    tol: float = 1e-6
    max_epochs: int = 1000
    seed: int = 0
    task: str = "P"

    def __post_init__(self) -> None:
        if self.c <= 0:
            raise ValidationError(f"penalty c must be > 0, got {self.c}")
        if self.tol <= 0:
            raise ValidationError(f"tol must be > 0, got {self.tol}")
        if self.max_epochs < 1:
            raise ValidationError(f"max_epochs must be >= 1, got {self.max_epochs}")
        if self.task not in TASKS:
            raise ValidationError(f"task must be one of {TASKS}, got {self.task!r}")


@dataclass(frozen=True)
class CsrMatrix:
    """Minimal CSR container; row indices strictly increasing."""

    indptr: np.ndarray
    indices: np.ndarray
    data: np.ndarray
    shape: tuple[int, int]

    @property
    def n_rows(self) -> int:
        return self.shape[0]


def to_csr(vectors: Sequence[SparseVector]) -> CsrMatrix:
    """Pack sparse vectors into CSR form with sorted row indices."""
    if not vectors:
        raise ValidationError("cannot build a matrix from zero vectors")
    dim = vectors[0].dim
    for v in vectors:
        if v.dim != dim:
            raise ContractViolation(
                f"inconsistent vector dimensions: {v.dim} != {dim}"
            )
    indptr = np.zeros(len(vectors) + 1, dtype=np.int64)
    nnz = sum(len(v.components) for v in vectors)
    indices = np.empty(nnz, dtype=np.int64)
    data = np.empty(nnz, dtype=np.float64)
    pos = 0
    for r, v in enumerate(vectors):
        for idx, val in v.sorted_items():
            indices[pos] = idx
            data[pos] = val
            pos += 1
        indptr[r + 1] = pos
    return CsrMatrix(indptr=indptr, indices=indices, data=data, shape=(len(vectors), dim))


@dataclass(frozen=True)
class LinearModel:
    """Trained linear classifier plus everything needed to reuse it."""

    w: np.ndarray
    b: float
    config: TrainingConfig
    objective_at_convergence: float
    converged: bool
    epochs: int
    duality_gap: float
    objective_history: tuple[float, ...] = ()
    vocab: Vocabulary | None = None
    l2_normalize: bool = True

    @property
    def dim(self) -> int:
        return int(self.w.shape[0])

    def with_vocab(self, vocab: Vocabulary, l2_normalize: bool) -> "LinearModel":
        if vocab.size != self.dim:
            raise ContractViolation(
                f"vocabulary size {vocab.size} does not match weight "
                f"dimension {self.dim}"
            )
        return replace(self, vocab=vocab, l2_normalize=l2_normalize)


@dataclass(frozen=True)
class SlackSummary:
    """Per-instance hinge slacks xi_i = max(0, 1 - y_i*(w.x_i + b))."""

    xi: tuple[float, ...]
    total_slack: float


def _exact_bias(y: np.ndarray, margin: np.ndarray, n_pos: int) -> float:
    """Exact minimizer of the hinge sum over b for fixed w.

    The hinge sum is piecewise linear in b with one breakpoint y_i - m_i
    per instance and slope (k - n_pos) between the k-th and (k+1)-th
    smallest breakpoints, so the minimizing interval is spanned by order
    statistics n_pos and n_pos+1; the midpoint is returned for a
    deterministic choice.
    """
    breaks = y - margin
    part = np.partition(breaks, (n_pos - 1, n_pos))
    return float((part[n_pos - 1] + part[n_pos]) / 2.0)


def _primal_objective(
    w: np.ndarray, b: float, y: np.ndarray, margin: np.ndarray, c: float
) -> float:
    hinge = np.maximum(0.0, 1.0 - y * (margin + b))
    return 0.5 * float(np.dot(w, w)) + c * float(np.sum(hinge))


def _validate_labels(y: np.ndarray) -> None:
    if not np.all(np.isin(y, (-1.0, 1.0))):
        bad = sorted(set(np.unique(y)) - {-1.0, 1.0})
        raise ValidationError(f"labels must be +1/-1, found {bad}")
    if np.all(y > 0) or np.all(y < 0):
        raise ValidationError("training data contains a single class")


def train(
    X: Sequence[SparseVector] | CsrMatrix,
    y: Sequence[int] | np.ndarray,
    cfg: TrainingConfig,
) -> LinearModel:
    """Fit the soft-margin SVM; deterministic for fixed (data, cfg, seed)."""
    csr = X if isinstance(X, CsrMatrix) else to_csr(X)
    yv = np.asarray(y, dtype=np.float64)
    n, dim = csr.shape
    if yv.shape != (n,):
        raise ContractViolation(f"got {n} vectors but {yv.shape[0]} labels")
    if n < 2:
        raise ValidationError(f"need at least 2 training instances, got {n}")
    _validate_labels(yv)

    c = float(cfg.c)
    sqn = row_sq_norms(csr.indptr, csr.data, n)
    rng = np.random.default_rng(cfg.seed)
    n_pos = int(np.sum(yv > 0))

    alpha = np.zeros(n, dtype=np.float64)
    w = np.zeros(dim, dtype=np.float64)
    m = np.zeros(n, dtype=np.float64)

    b = _exact_bias(yv, m, n_pos)
    f = _primal_objective(w, b, yv, m, c)
    best_w, best_b, best_f = w.copy(), b, f
    history = [f]
    gap = best_f  # D(0) = 0
    converged = gap <= cfg.tol * (1.0 + abs(best_f))

    epochs = 0
    while not converged and epochs < cfg.max_epochs:
        epochs += 1
        # One exact step on the most violating feasible pair.
        g = yv - m
        up = ((yv > 0) & (alpha < c)) | ((yv < 0) & (alpha > 0))
        low = ((yv > 0) & (alpha > 0)) | ((yv < 0) & (alpha < c))
        if up.any() and low.any():
            gi = np.where(up, g, -np.inf)
            gj = np.where(low, g, np.inf)
            i = int(np.argmax(gi))
            j = int(np.argmin(gj))
            if gi[i] - gj[j] > 0.0:
                pair_pass(
                    csr.indptr, csr.indices, csr.data, yv, sqn, alpha, w,
                    np.array([i, j], dtype=np.int64), c,
                )
        # Full pass over a seeded random pairing of all instances.
        perm = rng.permutation(n).astype(np.int64)
        pair_pass(csr.indptr, csr.indices, csr.data, yv, sqn, alpha, w, perm, c)
        np.clip(alpha, 0.0, c, out=alpha)
        w = weights_from_alpha(csr.indptr, csr.indices, csr.data, yv, alpha, dim)
        m = margins(csr.indptr, csr.indices, csr.data, w, n)
        b = _exact_bias(yv, m, n_pos)
        f = _primal_objective(w, b, yv, m, c)
        if f < best_f:
            best_w, best_b, best_f = w.copy(), b, f
        history.append(best_f)
        dual = float(np.sum(alpha)) - 0.5 * float(np.dot(w, w))
        gap = best_f - dual
        converged = gap <= cfg.tol * (1.0 + abs(best_f))

    return LinearModel(
        w=best_w,
        b=best_b,
        config=cfg,
        objective_at_convergence=best_f,
        converged=bool(converged),
        epochs=epochs,
        duality_gap=float(gap),
        objective_history=tuple(history),
    )


def decision(m: LinearModel, x: SparseVector) -> float:
    """Raw score w.x + b, accumulated in ascending index order."""
    if x.dim != m.dim:
        raise ContractViolation(
            f"vector dimension {x.dim} does not match model dimension {m.dim}"
        )
    acc = 0.0
    w = m.w
    for idx, val in x.sorted_items():
        acc += w[idx] * val
    return acc + m.b


def decision_many(model: LinearModel, X: Sequence[SparseVector] | CsrMatrix) -> np.ndarray:
    """Batch scores; bitwise identical to per-vector decision()."""
    csr = X if isinstance(X, CsrMatrix) else to_csr(X)
    if csr.shape[1] != model.dim:
        raise ContractViolation(
            f"matrix dimension {csr.shape[1]} does not match model "
            f"dimension {model.dim}"
        )
    return margins(csr.indptr, csr.indices, csr.data, model.w, csr.n_rows) + model.b


def predict(m: LinearModel, x: SparseVector) -> int:
    """Binary label; a score of exactly zero classifies positive."""
    return 1 if decision(m, x) >= 0.0 else 0


def slack_summary(
    model: LinearModel, X: Sequence[SparseVector] | CsrMatrix, y: Sequence[int] | np.ndarray
) -> SlackSummary:
    yv = np.asarray(y, dtype=np.float64)
    _validate_labels(yv)
    scores = decision_many(model, X)
    xi = np.maximum(0.0, 1.0 - yv * scores)
    return SlackSummary(xi=tuple(float(v) for v in xi), total_slack=float(np.sum(xi)))


def objective(
    model: LinearModel, X: Sequence[SparseVector] | CsrMatrix, y: Sequence[int] | np.ndarray
) -> float:
    """Evaluate 0.5*||w||^2 + C * total slack on the given data."""
    yv = np.asarray(y, dtype=np.float64)
    _validate_labels(yv)
    scores = decision_many(model, X)
    hinge = np.maximum(0.0, 1.0 - yv * scores)
    return 0.5 * float(np.dot(model.w, model.w)) + model.config.c * float(np.sum(hinge))
