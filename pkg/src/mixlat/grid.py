"""Bounded-variation functions sampled on an (m+1)-point grid.

Initial order is pointwise; ``f ≼ g`` additionally requires ``g - f`` to be
nondecreasing.  Both envelopes are a single running-maximum scan::

    (f ∨ g)_i = f_i + max_{j<=i} (g_j - f_j)^+
    (f ∧ g)_i = f_i - max_{j<=i} (f_j - g_j)^+

Abscissae never enter: orders, envelopes and norms only see the sample
values and their order along the grid.
"""
import itertools
from dataclasses import dataclass, field

import numpy as np

from mixlat import kernels
from mixlat.core import (DEFAULT_RADIUS, MixedLatticeError, MixedLatticeSpace,
                         _zero_some)

MAX_AUDIT_BOUND = 6


class GridSpace(MixedLatticeSpace):
    kind = "bv_grid"

    def __init__(self, m, tol=None):
        if int(m) < 1:
            raise MixedLatticeError("grid needs m >= 1 (at least two points)")
        super().__init__(int(m) + 1, tol)
        self.m = int(m)

    def __repr__(self):
        return f"GridSpace(m={self.m})"

    def _env_up(self, u, v):
        return kernels.grid_envelope(u, v)

    def _env_down(self, u, v):
        return u - np.maximum.accumulate(np.maximum(u - v, 0.0), axis=-1)

    def initial_gap(self, z):
        return np.maximum(-np.min(z, axis=-1), 0.0)

    def specific_gap(self, z):
        drop = -np.min(np.diff(z, axis=-1), axis=-1)
        return np.maximum(np.maximum(-z[..., 0], drop), 0.0)

    def sample_initial_cone(self, rng, size, radius=DEFAULT_RADIUS):
        return _zero_some(rng, rng.uniform(0.0, radius, size=(size, self.dim)))

    def sample_specific_cone(self, rng, size, radius=DEFAULT_RADIUS):
        steps = rng.uniform(0.0, radius / self.dim, size=(size, self.dim))
        steps[rng.random(steps.shape) < 0.3] = 0.0
        return _zero_some(rng, np.cumsum(steps, axis=1))

    def split_specific(self, z):
        """Jordan-type split: positive and negative increments, accumulated."""
        z = np.asarray(z, dtype=np.float64)
        steps = np.diff(z, axis=-1, prepend=0.0)
        a = np.cumsum(np.maximum(steps, 0.0), axis=-1)
        b = np.cumsum(np.maximum(-steps, 0.0), axis=-1)
        return a, b, np.ones(z.shape[:-1], dtype=bool)

    def to_json(self):
        return {"type": self.kind, "m": self.m,
                "atol": self.tol.atol, "rtol": self.tol.rtol}


def sleq_grid(space, f, g):
    f, g = space.element(f), space.element(g)
    return space.leq_specific(f, g)


def env_up_grid(space, f, g):
    f, g = space.element(f), space.element(g)
    return kernels.grid_envelope(f, g)


def env_down_grid(space, f, g):
    f, g = space.element(f), space.element(g)
    return space._env_down(*np.broadcast_arrays(f, g))


def sup_norm(f):
    return np.max(np.abs(f), axis=-1)


def bv_norm(f):
    """``|f_0| + sum |f_i - f_{i-1}|``."""
    f = np.asarray(f, dtype=np.float64)
    return np.abs(f[..., 0]) + np.sum(np.abs(np.diff(f, axis=-1)), axis=-1)


def split_specific(space, f):
    a, b, _ = space.split_specific(space.element(f))
    return a, b


# -- exhaustive audit of the sup-norm claims ------------------------------------

@dataclass
class AuditReport:
    m: int
    value_bound: int
    functions: int
    claim_norm_eq: dict
    claim_ml_norm: dict
    bv_under_s_order: dict
    s_routes_agree: bool = True
    notes: list = field(default_factory=list)

    def to_json(self):
        return {
            "m": self.m,
            "value_bound": self.value_bound,
            "functions": self.functions,
            "s_routes_agree": self.s_routes_agree,
            "claim_norm_eq": self.claim_norm_eq,
            "claim_ml_norm": self.claim_ml_norm,
            "bv_under_s_order": self.bv_under_s_order,
            "notes": self.notes,
        }


def _two_route_s(space, G):
    """``s`` via ``r_upp + r_low`` and via the average of ``x∨-x`` and ``-x∨x``."""
    zero = np.zeros_like(G)
    route_parts = space._env_up(zero, G) + space._env_up(zero, -G)
    route_abs = 0.5 * (space._env_up(G, -G) + space._env_up(-G, G))
    return route_parts, route_abs


def _first_pair(keys, ii, jj):
    """Lexicographically smallest pair under the per-pair key columns."""
    order = np.lexsort(tuple(reversed([k for k in keys])))
    return int(ii[order[0]]), int(jj[order[0]])


def audit_sup_norm_claims(space, value_bound=4):
    """Exhaustively test two sup-norm claims on integer grid functions.

    Every ``g`` with integer values in ``[-value_bound, value_bound]`` is
    enumerated.  Checked:

    * ``claim_norm_eq``: ``s(g)`` at the right endpoint equals ``||g||_inf``.
    * ``claim_ml_norm``: ``s(f) <= s(g)`` pointwise implies
      ``||f||_inf <= ||g||_inf`` (the sup norm is a mixed lattice norm).

    The same pass records, without asserting anything, how the BV norm
    behaves under the ``s``-comparison.  Witnesses are minimal in the order
    (largest sup norm, l1 mass, lexicographic values).  ``s(g)`` is computed
    by two independent routes which must agree bit for bit.
    """
    if not isinstance(space, GridSpace) or space.m != 2:
        raise MixedLatticeError("audit requires a bv_grid space with m = 2")
    value_bound = int(value_bound)
    if not 0 <= value_bound <= MAX_AUDIT_BOUND:
        raise MixedLatticeError(f"value_bound must lie in [0, {MAX_AUDIT_BOUND}]")

    values = range(-value_bound, value_bound + 1)
    G = np.array(list(itertools.product(values, repeat=space.dim)), dtype=np.float64)
    s_parts, s_abs = _two_route_s(space, G)
    if not np.array_equal(s_parts, s_abs):
        bad = int(np.nonzero(np.any(s_parts != s_abs, axis=1))[0][0])
        raise ArithmeticError(f"s(g) routes disagree at g={G[bad].tolist()}")
    S = s_parts
    sup = sup_norm(G)
    l1 = np.sum(np.abs(G), axis=1)
    bv = bv_norm(G)

    # (i) s(g)(b) == ||g||_inf
    bad = np.nonzero(S[:, -1] != sup)[0]
    if bad.size:
        k = bad[np.lexsort((*(G[bad].T[::-1]), l1[bad], sup[bad]))[0]]
        witness = {"g": G[k].tolist(), "s_g": S[k].tolist(),
                   "s_g_at_b": float(S[k, -1]), "sup_norm": float(sup[k])}
    else:
        witness = None
    claim_norm_eq = {"holds": bool(bad.size == 0), "counterexample": witness,
                     "violations": int(bad.size)}

    # (ii) s(f) <= s(g)  =>  ||f||_inf <= ||g||_inf
    ii, jj = kernels.dominated_pairs(S, sup, sup)
    if ii.size:
        keys = [np.maximum(sup[ii], sup[jj]), l1[ii] + l1[jj],
                *G[ii].T, *G[jj].T]
        i, j = _first_pair(keys, ii, jj)
        witness = {"f": G[i].tolist(), "g": G[j].tolist(),
                   "s_f": S[i].tolist(), "s_g": S[j].tolist(),
                   "sup_f": float(sup[i]), "sup_g": float(sup[j])}
    else:
        witness = None
    claim_ml_norm = {"holds": bool(ii.size == 0), "counterexample": witness,
                     "violations": int(ii.size)}

    # informational: the BV norm is not claimed monotone under s-comparison
    bi, bj = kernels.dominated_pairs(S, bv, bv)
    if bi.size:
        keys = [np.maximum(sup[bi], sup[bj]), l1[bi] + l1[bj], *G[bi].T, *G[bj].T]
        i, j = _first_pair(keys, bi, bj)
        example = {"f": G[i].tolist(), "g": G[j].tolist(),
                   "bv_f": float(bv[i]), "bv_g": float(bv[j])}
    else:
        example = None
    bv_info = {"claimed": False, "violating_pairs": int(bi.size), "example": example}

    return AuditReport(m=space.m, value_bound=value_bound, functions=int(G.shape[0]),
                       claim_norm_eq=claim_norm_eq, claim_ml_norm=claim_ml_norm,
                       bv_under_s_order=bv_info)
