"""Hull membership, Minkowski gauges and sampled checks of the hull properties.

Base sets are finite point sets (exact scans) or axis-aligned boxes in the
grid space (greedy feasibility).  All membership predicates broadcast: ``y``
may be a batch ``(N, d)`` and the base points either shared ``(K, d)`` or
per-sample ``(N, K, d)``.
"""
from dataclasses import dataclass

import numpy as np

from mixlat import kernels
from mixlat.core import (DEFAULT_RADIUS, MixedLatticeError, Tolerance, r_upp,
                         scale_of, sym_abs)
from mixlat.grid import GridSpace
from mixlat.laws import Evaluator, law_rng

GAUGE_ITERATIONS = 80
STAR_PROBES = 8


@dataclass(frozen=True)
class FiniteSet:
    points: np.ndarray

    def __post_init__(self):
        pts = np.atleast_2d(np.asarray(self.points, dtype=np.float64))
        if pts.shape[0] == 0:
            raise MixedLatticeError("a point set needs at least one point")
        object.__setattr__(self, "points", pts)

    def to_json(self):
        return {"type": "points", "pts": self.points.tolist()}


@dataclass(frozen=True)
class BoxSet:
    lo: np.ndarray
    hi: np.ndarray

    def __post_init__(self):
        lo = np.asarray(self.lo, dtype=np.float64).reshape(-1)
        hi = np.asarray(self.hi, dtype=np.float64).reshape(-1)
        if lo.shape != hi.shape:
            raise MixedLatticeError("box bounds must have equal length")
        if np.any(lo >= hi) or np.any(lo > 0) or np.any(hi < 0):
            raise MixedLatticeError("box needs lo < hi and lo <= 0 <= hi")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def symmetric(cls, dim, radius=1.0):
        return cls(-radius * np.ones(dim), radius * np.ones(dim))

    def contains(self, z):
        return np.all((z >= self.lo) & (z <= self.hi), axis=-1)

    def to_json(self):
        return {"type": "box", "lo": self.lo.tolist(), "hi": self.hi.tolist()}


@dataclass(frozen=True)
class GaugeResult:
    value: float
    iterations: int
    bracket_width: float

    def to_json(self):
        return {"value": self.value, "iterations": self.iterations,
                "bracket_width": self.bracket_width}


def _points(space, A):
    pts = A.points if isinstance(A, FiniteSet) else np.asarray(A, dtype=np.float64)
    pts = space.element(pts)
    return pts if pts.ndim >= 2 else pts[None, :]


def _pairwise(space, pred, lhs, rhs):
    """``pred`` between every base point and every sample: shape ``(N, K)``."""
    return pred(lhs, rhs)


def mf_member(space, A, y, variant=1):
    """Type-1: some ``x ≼ y ≤ z``; type-2: some ``x ≤ y ≼ z`` (x, z in A)."""
    pts = _points(space, A)
    y = space.element(y)[..., None, :]
    if variant == 1:
        below = space.leq_specific(pts, y)
        above = space.leq_initial(y, pts)
    elif variant == 2:
        below = space.leq_initial(pts, y)
        above = space.leq_specific(y, pts)
    else:
        raise MixedLatticeError("variant must be 1 or 2")
    return np.any(below, axis=-1) & np.any(above, axis=-1)


def ms_member(space, A, y, variant=1):
    """Type-1: some ``x`` in A with ``-s(x) ≼ y ≤ s(x)``; type-2 swaps the orders."""
    S = sym_abs(space, _points(space, A))
    y = space.element(y)[..., None, :]
    if variant == 1:
        ok = space.leq_specific(-S, y) & space.leq_initial(y, S)
    elif variant == 2:
        ok = space.leq_initial(-S, y) & space.leq_specific(y, S)
    else:
        raise MixedLatticeError("variant must be 1 or 2")
    return np.any(ok, axis=-1)


def sh_member(space, A, y):
    """Some ``x`` in A with ``s(y) <= s(x)``."""
    S = sym_abs(space, _points(space, A))
    sy = sym_abs(space, y)[..., None, :]
    return np.any(space.leq_initial(sy, S), axis=-1)


def box_mf1_member(space, U, z):
    """``z`` in ``(U + V_sp) ∩ (U - V_p)`` for a box ``U`` in the grid space."""
    if not isinstance(space, GridSpace):
        raise MixedLatticeError("box hulls are defined on the bv_grid space")
    z = space.element(z)
    if U.lo.shape[0] != space.dim:
        raise MixedLatticeError("box dimension does not match the space")
    bound = space.tol.bound(scale_of(z))
    return kernels.box_mf1_member(z, U.lo, U.hi, bound)


def box_gauge(U, z):
    """Closed-form gauge of a box: ``max_i max(z_i / hi_i, z_i / lo_i)``."""
    z = np.asarray(z, dtype=np.float64)
    return np.max(np.maximum(z / U.hi, z / U.lo), axis=-1)


def _bisect(member, Z, t_hi, iterations):
    lo = np.zeros(Z.shape[0])
    hi = t_hi.copy()
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        ok = member(Z / mid[:, None])
        hi = np.where(ok, mid, hi)
        lo = np.where(ok, lo, mid)
    return lo, hi


def gauge_values(member, Z, t_hi=None, iterations=GAUGE_ITERATIONS, check_star=True):
    """Batched Minkowski gauge ``inf{t > 0 : z in tU}`` by bisection.

    ``member`` maps a batch ``(N, d)`` to booleans and must describe a set
    star-shaped about 0.  Returns ``(values, bracket_widths)``.
    """
    Z = np.atleast_2d(np.asarray(Z, dtype=np.float64))
    zero = ~np.any(Z, axis=-1)
    if t_hi is None:
        t_hi = 2.0 ** 10 * (1.0 + np.max(np.abs(Z), axis=-1))
    t_hi = np.broadcast_to(np.asarray(t_hi, dtype=np.float64), zero.shape).copy()
    if not np.all(member(Z / t_hi[:, None]) | zero):
        raise MixedLatticeError("not absorbed by t_hi")
    lo, hi = _bisect(member, Z, t_hi, iterations)
    value = np.where(zero, 0.0, 0.5 * (lo + hi))
    width = np.where(zero, 0.0, hi - lo)
    if check_star:
        _star_spot_check(member, Z[~zero], value[~zero], t_hi[~zero])
    return value, width


def _star_spot_check(member, Z, value, t_hi):
    """Membership of ``z / t`` must be monotone in t on a few probe points.

    Seven probes sit at ``value * 2^(k/2)`` for k = -4..2, the eighth at
    ``t_hi``.
    """
    if Z.shape[0] == 0:
        return
    factors = 2.0 ** (np.arange(-4, 3) / 2.0)
    ts = np.minimum(value[:, None] * factors[None, :], t_hi[:, None])
    ts = np.concatenate([ts, t_hi[:, None]], axis=1)
    ts = np.maximum(ts, t_hi[:, None] * 2.0 ** -60)
    inside = np.stack([member(Z / ts[:, j, None]) for j in range(STAR_PROBES)], axis=1)
    if np.any(inside[:, :-1] & ~inside[:, 1:]):
        raise MixedLatticeError("member set is not star-shaped about 0")


def gauge_bisect(member, z, t_hi=None, iterations=GAUGE_ITERATIONS):
    """Gauge of a single element; ``member`` takes a batch of elements."""
    value, width = gauge_values(member, np.asarray(z, dtype=np.float64)[None, :],
                                None if t_hi is None else [t_hi], iterations)
    return GaugeResult(float(value[0]), iterations, float(width[0]))


def mf1_box_gauge(space, U, Z, t_hi=None):
    return gauge_values(lambda W: box_mf1_member(space, U, W), Z, t_hi)[0]


# -- constructive samplers and the hull properties ---------------------------

def _shrink_under(space, target, w0, iterations=60):
    """Scale ``w0`` by the largest ``lam`` in [0, 1] with ``lam * s(w0) <= target``.

    Feasibility is tested with zero slack so that chained comparisons built on
    the result do not accumulate tolerance.
    """
    s0 = sym_abs(space, w0)
    lo = np.zeros(w0.shape[0])
    hi = np.ones(w0.shape[0])
    exact = Tolerance(0.0, 0.0)
    fits = space.leq_initial(s0, target, exact)
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        ok = space.leq_initial(mid[:, None] * s0, target, exact)
        lo = np.where(ok, mid, lo)
        hi = np.where(ok, hi, mid)
    lam = np.where(fits, 1.0, lo)
    return lam[:, None] * w0


def sample_ms1_members(space, rng, S, radius=DEFAULT_RADIUS):
    """Points ``-s + r_upp(2s - c)`` with ``c`` in ``V_p``: inside ``[-s ≼ · ≤ s]``."""
    c = space.sample_initial_cone(rng, S.shape[0], radius)
    return -S + r_upp(space, 2.0 * S - c)


def ms_absorb_search(space, y, radius=1.0, ladder=range(-10, 11), probes=64, seed=0):
    """Look for ``t > 0`` with ``t y`` in ``MS_1(A)``, ``A`` the box of ``radius``.

    Uses the specific-cone splitter ``y = a - b`` when it succeeds: with
    ``w = a + b`` scaled into A, ``-w ≼ t y ≼ w``.  Otherwise falls back to a
    scan over a ladder of ``t`` and sampled base points, which cannot succeed
    when the specific cone does not generate ``y``.  The ladder stays within
    ``2^-10 .. 2^10`` so that a scaled probe never shrinks under the absolute
    tolerance.  Returns a boolean per row.
    """
    y = np.atleast_2d(space.element(y))
    a, b, ok = space.split_specific(y)
    w = a + b
    size = np.max(np.abs(w), axis=-1)
    t = np.where(size > 0, radius / np.where(size > 0, size, 1.0), 1.0)
    x = t[:, None] * w
    found = ok & ms_member(space, x[:, None, :], t[:, None] * y, 1)
    if np.all(found):
        return found
    rng = law_rng(seed, "ms-absorb-fallback")
    base = rng.uniform(-radius, radius, size=(probes, space.dim))
    for k in ladder:
        rest = ~found
        if not np.any(rest):
            break
        found[rest] = ms_member(space, base, (2.0 ** k) * y[rest], 1)
    return found


def check_hull_props(space, samples=10_000, seed=0, tol=1e-9, radius=DEFAULT_RADIUS,
                     base_size=4):
    """Run the hull properties as sampled checks; returns a list of reports."""
    reports = []
    n = int(samples)

    def run(check_id, body):
        ev = Evaluator(space, tol)
        notes = body(ev, law_rng(seed, check_id)) or ""
        reports.append(ev.report(check_id, n, seed, notes=notes))

    def base(rng):
        return np.stack([space.sample_element(rng, n, radius) for _ in range(base_size)], axis=1)

    def mixed_probe(rng, A):
        """Thirds: x + h, z - c (x, z from A) and free elements."""
        pick = rng.integers(0, base_size, size=(2, n))
        rows = np.arange(n)
        y1 = A[rows, pick[0]] + space.sample_specific_cone(rng, n, radius)
        y2 = A[rows, pick[1]] - space.sample_initial_cone(rng, n, radius)
        y3 = space.sample_element(rng, n, radius)
        which = rng.integers(0, 3, size=n)[:, None]
        return np.where(which == 0, y1, np.where(which == 1, y2, y3))

    def mf_conj(ev, rng):
        half = base(rng)
        A = np.concatenate([half, -half], axis=1)
        y = mixed_probe(rng, A)
        m1 = mf_member(space, A, y, 1)
        m2 = mf_member(space, A, -y, 2)
        ev.holds("y ∈ MF1(A) ⟺ -y ∈ MF2(A)", m1 == m2, y=y)
        return f"members: {int(m1.sum())}/{n}"

    def ms_conj(ev, rng):
        A = base(rng)
        S = sym_abs(space, A[:, 0])
        y = sample_ms1_members(space, rng, S, radius)
        flip = rng.integers(0, 3, size=n)[:, None]
        y = np.where(flip == 0, y, np.where(flip == 1, -y, space.sample_element(rng, n, radius)))
        m1 = ms_member(space, A, y, 1)
        m2 = ms_member(space, A, -y, 2)
        ev.holds("y ∈ MS1(A) ⟺ -y ∈ MS2(A)", m1 == m2, y=y)
        return f"members: {int(m1.sum())}/{n}"

    def ms_scale(ev, rng):
        A = base(rng)
        S = sym_abs(space, A[:, 0])
        y = sample_ms1_members(space, rng, S, radius)
        t = rng.uniform(0.0, 1.0, size=(n, 1))
        ev.holds("constructed y ∈ MS1(A)", ms_member(space, A, y, 1), y=y)
        ev.holds("t ∈ [0,1] ⇒ ty ∈ MS1(A)", ms_member(space, A, t * y, 1), y=y, t=t[:, 0])
        ev.holds("t ∈ [0,1] ⇒ -ty ∈ MS2(A)", ms_member(space, A, -t * y, 2), y=y, t=t[:, 0])

    def ms_balanced(ev, rng):
        A = base(rng)
        S = sym_abs(space, A[:, 0])
        y = sample_ms1_members(space, rng, S, radius)
        y = np.where(rng.random(n)[:, None] < 0.5, y, -y)
        t = rng.uniform(-1.0, 1.0, size=(n, 1))
        union = ms_member(space, A, t * y, 1) | ms_member(space, A, t * y, 2)
        ev.holds("y ∈ MS1 ∪ MS2, |t| ≤ 1 ⇒ ty ∈ MS1 ∪ MS2", union, y=y, t=t[:, 0])

    def ms_pm_s(ev, rng):
        A = base(rng)
        S = sym_abs(space, A[:, 0])
        for sign in (1.0, -1.0):
            for variant in (1, 2):
                ev.holds(f"{'+' if sign > 0 else '-'}s(x) ∈ MS{variant}(A)",
                         ms_member(space, A, sign * S, variant), x=A[:, 0])

    def ms_zero(ev, rng):
        A = base(rng)
        zero = np.zeros((n, space.dim))
        ev.holds("0 ∈ MS1(A)", ms_member(space, A, zero, 1), a=A[:, 0])
        ev.holds("0 ∈ MS2(A)", ms_member(space, A, zero, 2), a=A[:, 0])

    def sh_contains(ev, rng):
        A = base(rng)
        for k in range(base_size):
            ev.holds("A ⊆ SH(A)", sh_member(space, A, A[:, k]), x=A[:, k])
        for variant in (1, 2):
            ev.holds(f"A ⊆ MF{variant}(A)", mf_member(space, A, A[:, 0], variant), x=A[:, 0])

    def sh_solid(ev, rng):
        A = base(rng)
        S = sym_abs(space, A[:, 0])
        y = _shrink_under(space, S, space.sample_element(rng, n, radius))
        w = _shrink_under(space, sym_abs(space, y), space.sample_element(rng, n, radius))
        in_y = sh_member(space, A, y)
        nested = space.leq_initial(sym_abs(space, w), sym_abs(space, y))
        ev.holds("constructed y ∈ SH(A)", in_y, y=y)
        ev.holds("constructed s(w) ≤ s(y)", nested, y=y, w=w)
        ev.holds("y ∈ SH(A), s(w) ≤ s(y) ⇒ w ∈ SH(A)",
                 ~(in_y & nested) | sh_member(space, A, w), y=y, w=w)

    run("H-MF-CONJ", mf_conj)
    run("H-MS-CONJ", ms_conj)
    run("H-MS-SCALE", ms_scale)
    run("H-MS-BALANCED", ms_balanced)
    run("H-MS-PMS", ms_pm_s)
    run("H-MS-ZERO", ms_zero)
    run("H-SH-CONTAINS", sh_contains)
    run("H-SH-SOLID", sh_solid)
    return reports


def check_absorbency(space, samples=1_000, seed=0):
    """Constructive ``MS_1`` absorbency search on random elements.

    Returns ``(found, total, generating)`` where ``generating`` reports
    whether every probe could be split by the specific cone.
    """
    rng = law_rng(seed, "H-MS-ABSORB")
    y = space.sample_element(rng, int(samples))
    found = ms_absorb_search(space, y, seed=seed)
    _, _, ok = space.split_specific(y)
    return int(found.sum()), int(samples), bool(np.all(ok))


def check_gauge_monotone(space, U=None, samples=10_000, seed=0, tol=1e-8,
                         radius=DEFAULT_RADIUS):
    """Gauge of ``MF_1(U)`` on pairs ``0 ≼ y ≤ z``: ``p(y) <= p(z) + tol``."""
    U = U or BoxSet.symmetric(space.dim)
    rng = law_rng(seed, "H-GAUGE-MONO")
    n = int(samples)
    y = space.sample_specific_cone(rng, n, radius)
    z = y + space.sample_initial_cone(rng, n, radius)
    py = mf1_box_gauge(space, U, y)
    pz = mf1_box_gauge(space, U, z)
    ev = Evaluator(space, 0.0)
    ev.holds("0 ≼ y ≤ z ⇒ p(y) ≤ p(z) + tol", py <= pz + tol, y=y, z=z)
    rep = ev.report("H-GAUGE-MONO", n, seed)
    rep.tol = tol
    return rep
