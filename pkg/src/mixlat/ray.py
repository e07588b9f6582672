"""``R^n`` ordered by a polyhedral cone and by a ray through its interior.

The initial order comes from ``C = {z : A z >= 0}`` (rows of ``A`` are
inward facet normals) and the specific order from ``R_x = {t x : t >= 0}``
with ``x`` strictly inside ``C``.  Every envelope is a shift along ``x``::

    u ∨ v = u + t* x,   t* = max(0, max_i a_i.(v - u) / a_i.x)
"""
from dataclasses import dataclass

import numpy as np

from mixlat import kernels
from mixlat.core import (DEFAULT_RADIUS, MixedLatticeError, MixedLatticeSpace,
                         Tolerance, _zero_some, l_upp, scale_of)

INTERIOR_MARGIN = 1e-6
RANK_RTOL = 1e-10


class RaySpace(MixedLatticeSpace):
    """Mixed lattice space from a pointed generating cone and an interior ray."""

    kind = "ray_cone"

    def __init__(self, A, x_hat, tol=None):
        A = np.array(A, dtype=np.float64, ndmin=2)
        x_hat = np.array(x_hat, dtype=np.float64).reshape(-1)
        if A.ndim != 2 or A.shape[1] != x_hat.shape[0]:
            raise MixedLatticeError("A must be a k x n matrix and x_hat a vector of length n")
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(x_hat))):
            raise MixedLatticeError("A and x_hat must be finite")
        super().__init__(A.shape[1], tol)
        sv = np.linalg.svd(A, compute_uv=False)
        if sv.size < self.dim or sv[-1] <= RANK_RTOL * sv[0]:
            raise MixedLatticeError("cone not pointed/generating")
        denom = A @ x_hat
        margin = INTERIOR_MARGIN * np.linalg.norm(A, axis=1) * np.linalg.norm(x_hat)
        if np.any(denom < margin) or not np.any(x_hat):
            raise MixedLatticeError("direction not interior")
        self.A = np.ascontiguousarray(A)
        self.x_hat = x_hat
        self.denom = np.ascontiguousarray(denom)
        self._row_norms = np.linalg.norm(A, axis=1)
        for arr in (self.A, self.x_hat, self.denom):
            arr.setflags(write=False)

    def __repr__(self):
        return f"RaySpace(n={self.dim}, k={self.A.shape[0]})"

    def _env_up(self, u, v):
        t = kernels.ray_shift(self.A, self.denom, v - u)
        return u + t[..., None] * self.x_hat

    def _env_down(self, u, v):
        t = kernels.ray_shift(self.A, self.denom, u - v)
        return u - t[..., None] * self.x_hat

    def initial_gap(self, z):
        worst = np.max(-(z @ self.A.T) / self._row_norms, axis=-1)
        return np.maximum(worst, 0.0)

    def specific_gap(self, z):
        """Euclidean distance from ``z`` to the ray."""
        tau = np.maximum(z @ self.x_hat, 0.0) / (self.x_hat @ self.x_hat)
        return np.linalg.norm(z - tau[..., None] * self.x_hat, axis=-1)

    def sample_initial_cone(self, rng, size, radius=DEFAULT_RADIUS):
        # w ∨ 0 always lies in C; on the boundary unless w already does
        w = rng.uniform(-radius, radius, size=(size, self.dim))
        return _zero_some(rng, l_upp(self, w))

    def sample_specific_cone(self, rng, size, radius=DEFAULT_RADIUS):
        t = rng.uniform(0.0, radius, size=size)
        return _zero_some(rng, t[:, None] * self.x_hat)

    def split_specific(self, z):
        z = np.asarray(z, dtype=np.float64)
        tau = (z @ self.x_hat) / (self.x_hat @ self.x_hat)
        resid = np.linalg.norm(z - tau[..., None] * self.x_hat, axis=-1)
        ok = resid <= self.tol.bound(scale_of(z))
        a = np.maximum(tau, 0.0)[..., None] * self.x_hat
        b = np.maximum(-tau, 0.0)[..., None] * self.x_hat
        return a, b, ok

    def to_json(self):
        return {"type": self.kind, "A": self.A.tolist(), "x_hat": self.x_hat.tolist(),
                "atol": self.tol.atol, "rtol": self.tol.rtol}


@dataclass(frozen=True)
class IntervalExtent:
    """Shape of ``{z : u ≼ z ≤ v}``: empty, or ``u + [0, t_max] x``."""

    status: str
    t_max: float = 0.0

    def to_json(self):
        return {"status": self.status, "t_max": self.t_max}


def make_ray_space(A, x_hat, tol=None):
    return RaySpace(A, x_hat, tol)


def cone_member(space, z):
    z = space.element(z)
    return space.initial_gap(z) <= space.tol.bound(scale_of(z))


def t_min_shift(space, y):
    """``min{t >= 0 : y + t x in C}`` in closed form."""
    y = space.element(y)
    return kernels.ray_shift(space.A, space.denom, -y)


def env_up_ray(space, u, v):
    u, v = space.element(u), space.element(v)
    return space._env_up(*np.broadcast_arrays(u, v))


def interval_extent(space, u, v):
    u, v = space.element(u), space.element(v)
    t = float(kernels.ray_extent(space.A, space.denom, v - u))
    if t < -float(space.tol.bound(scale_of(u, v))):
        return IntervalExtent("empty")
    return IntervalExtent("bounded", max(t, 0.0))


def ray_coord(space, z):
    """Scalar ``tau`` with ``z = tau x``; raises off the ray's line."""
    z = space.element(z)
    tau = (z @ space.x_hat) / (space.x_hat @ space.x_hat)
    resid = np.linalg.norm(z - tau[..., None] * space.x_hat, axis=-1)
    if np.any(resid > space.tol.bound(scale_of(z))):
        raise MixedLatticeError("not on specific ray")
    return tau


def bisect_t_min(space, y, t_hi=64.0, iterations=80):
    """Membership bisection for ``t_min_shift``; independent of the closed form.

    Works row-wise on a batch.  ``t_hi`` is doubled until ``y + t_hi x``
    lies in the cone.
    """
    y = np.atleast_2d(space.element(y))
    zero_tol = Tolerance(0.0, 0.0)

    def inside(t):
        pts = y + t[:, None] * space.x_hat
        return space.initial_gap(pts) <= zero_tol.bound(0.0)

    hi = np.full(y.shape[0], float(t_hi))
    while not np.all(inside(hi)):
        hi = np.where(inside(hi), hi, 2.0 * hi)
    lo = np.zeros_like(hi)
    done = inside(lo)
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        ok = inside(mid)
        hi = np.where(ok, mid, hi)
        lo = np.where(ok, lo, mid)
    return np.where(done, 0.0, hi)


def random_ray_space(rng, n, k, tol=None, max_tries=100_000):
    """Random valid ``RaySpace``: k unit normals, x = normalized normal sum."""
    if k < n:
        raise MixedLatticeError("need at least n facet normals")
    for _ in range(max_tries):
        A = rng.normal(size=(k, n))
        A /= np.linalg.norm(A, axis=1, keepdims=True)
        x_hat = A.sum(axis=0)
        norm = np.linalg.norm(x_hat)
        if norm == 0.0:
            continue
        x_hat /= norm
        try:
            return RaySpace(A, x_hat, tol)
        except MixedLatticeError:
            continue
    raise MixedLatticeError(f"no valid cone found in {max_tries} draws")
