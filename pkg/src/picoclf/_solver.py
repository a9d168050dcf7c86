"""Numba kernels for the dual SVM solver.

All kernels are single-threaded and accumulate in a fixed order, so
results are bit-reproducible for identical inputs. Rows of the CSR
matrix must carry strictly increasing column indices; dot products
between two rows rely on that ordering.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def pair_pass(indptr, indices, data, y, sqn, alpha, w, order, c):
    """Exact two-variable dual ascent steps over consecutive index pairs.

    For each pair (i, j) the dual objective restricted to the feasible
    line alpha_i += y_i*t, alpha_j -= y_j*t is a concave quadratic
    D0 + rho*t - 0.5*eta*t^2 with rho = (y_i - w.x_i) - (y_j - w.x_j)
    and eta = ||x_i - x_j||^2; t is the box-clipped maximizer. alpha and
    w are updated in place. The equality constraint sum(y*alpha) = 0 is
    preserved by construction.
    """
    n_pairs = order.shape[0] // 2
    for p in range(n_pairs):
        i = order[2 * p]
        j = order[2 * p + 1]
        if i == j:
            continue
        si, ei = indptr[i], indptr[i + 1]
        sj, ej = indptr[j], indptr[j + 1]
        wxi = 0.0
        for t in range(si, ei):
            wxi += w[indices[t]] * data[t]
        wxj = 0.0
        for t in range(sj, ej):
            wxj += w[indices[t]] * data[t]
        xij = 0.0
        a = si
        bb = sj
        while a < ei and bb < ej:
            ia = indices[a]
            ib = indices[bb]
            if ia == ib:
                xij += data[a] * data[bb]
                a += 1
                bb += 1
            elif ia < ib:
                a += 1
            else:
                bb += 1
        eta = sqn[i] + sqn[j] - 2.0 * xij
        rho = (y[i] - wxi) - (y[j] - wxj)
        if y[i] > 0.0:
            t_lo = -alpha[i]
            t_hi = c - alpha[i]
        else:
            t_lo = alpha[i] - c
            t_hi = alpha[i]
        if y[j] > 0.0:
            lo2 = alpha[j] - c
            hi2 = alpha[j]
        else:
            lo2 = -alpha[j]
            hi2 = c - alpha[j]
        if lo2 > t_lo:
            t_lo = lo2
        if hi2 < t_hi:
            t_hi = hi2
        if eta > 0.0:
            step = rho / eta
            if step < t_lo:
                step = t_lo
            elif step > t_hi:
                step = t_hi
        else:
            if rho > 0.0:
                step = t_hi
            elif rho < 0.0:
                step = t_lo
            else:
                step = 0.0
        if step != 0.0:
            alpha[i] += y[i] * step
            alpha[j] -= y[j] * step
            for t in range(si, ei):
                w[indices[t]] += step * data[t]
            for t in range(sj, ej):
                w[indices[t]] -= step * data[t]


@njit(cache=True)
def weights_from_alpha(indptr, indices, data, y, alpha, dim):
    """Recompute w = sum_i alpha_i y_i x_i, removing incremental drift."""
    w = np.zeros(dim)
    for i in range(alpha.shape[0]):
        ai = alpha[i]
        if ai != 0.0:
            coef = ai * y[i]
            for t in range(indptr[i], indptr[i + 1]):
                w[indices[t]] += coef * data[t]
    return w


@njit(cache=True)
def margins(indptr, indices, data, w, n):
    """Row dot products X @ w, accumulated in index order per row."""
    out = np.empty(n)
    for i in range(n):
        acc = 0.0
        for t in range(indptr[i], indptr[i + 1]):
            acc += w[indices[t]] * data[t]
        out[i] = acc
    return out


@njit(cache=True)
def row_sq_norms(indptr, data, n):
    out = np.empty(n)
    for i in range(n):
        acc = 0.0
        for t in range(indptr[i], indptr[i + 1]):
            acc += data[t] * data[t]
        out[i] = acc
    return out
