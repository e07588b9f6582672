"""Numpy implementations of the hot kernels.

Used when the compiled ``_ckernels`` extension is unavailable, and as the
reference the compiled versions are benchmarked and tested against.  All
functions take C-contiguous 2-D float64 arrays (one sample per row).
"""
import numpy as np


def ray_shift(A, denom, D):
    """Smallest t >= 0 with A (d_r + t x) >= 0 for every row d_r of D.

    ``denom`` holds the precomputed products ``A @ x``.
    """
    if D.shape[0] == 0:
        return np.zeros(0)
    ratios = (D @ A.T) / denom
    return np.maximum(ratios.max(axis=1), 0.0)


def ray_extent(A, denom, D):
    """Largest t with A (d_r - t x) >= 0; may be negative."""
    if D.shape[0] == 0:
        return np.zeros(0)
    return ((D @ A.T) / denom).min(axis=1)


def grid_envelope(F, G):
    """Row-wise f_i + max_{j<=i} (g_j - f_j)^+."""
    gap = np.maximum(G - F, 0.0)
    return F + np.maximum.accumulate(gap, axis=1)


def box_mf1_member(Z, lo, hi, bound):
    """Greedy decision of z in (U + V_sp) and z in (U - V_p) for a grid box U.

    ``bound`` is a per-row slack added to every comparison.
    """
    slack = bound[:, None]
    below_hi = np.all(Z <= hi + slack, axis=1)
    h = np.maximum.accumulate(np.maximum(Z - hi, 0.0), axis=1)
    fits = np.all(h <= Z - lo + slack, axis=1)
    return below_hi & fits


def dominated_pairs(S, left, right):
    """Index pairs (i, j) with S[i] <= S[j] pointwise and left[i] > right[j]."""
    dom = np.all(S[:, None, :] <= S[None, :, :], axis=2)
    hit = dom & (left[:, None] > right[None, :])
    i, j = np.nonzero(hit)
    return i.astype(np.int64), j.astype(np.int64)
