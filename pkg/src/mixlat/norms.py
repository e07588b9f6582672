"""Seminorms, asymmetric seminorm pairs and the asymmetric cone norm.

Functionals are wrapped in ``FunctionalHandle`` objects that evaluate a batch
of elements at once.  Handles are named by short strings, which nest::

    norm0, sup, bv, gauge:<set>, q:<handle>, p1:<handle>, p2:<handle>

``q:h`` is ``h(s(x))``, ``p1:h`` is ``h(xᵘ)`` and ``p2:h`` is ``h(xˡ)``.
"""
from dataclasses import dataclass, field

import numpy as np

from mixlat.core import (DEFAULT_RADIUS, MixedLatticeError, l_upp, r_low, r_upp,
                         sym_abs)
from mixlat.grid import GridSpace, bv_norm, sup_norm
from mixlat.hulls import (BoxSet, FiniteSet, box_mf1_member, gauge_values,
                          mf_member)
from mixlat.laws import Evaluator, LawReport, law_rng
from mixlat.ray import RaySpace, ray_coord

SEPARATION_FLOOR = 1e-8


@dataclass(frozen=True)
class FunctionalHandle:
    """A named nonnegative functional bound to one space."""

    id: str
    space: object
    fn: object = field(repr=False, compare=False)

    def __call__(self, z):
        z = self.space.element(z)
        flat = np.atleast_2d(z).reshape(-1, self.space.dim)
        out = np.asarray(self.fn(flat), dtype=np.float64)
        return out.reshape(z.shape[:-1]) if z.ndim > 1 else float(out[0])


def norm0(space, z):
    """Euclidean length of ``s(z)``, read off the specific ray."""
    if not isinstance(space, RaySpace):
        raise MixedLatticeError("norm0 is defined on ray_cone spaces")
    tau = ray_coord(space, sym_abs(space, z))
    return np.maximum(tau, 0.0) * np.linalg.norm(space.x_hat)


def asym_pair(space, rho, z):
    """``(rho(xᵘ), rho(xˡ))``: two conjugate asymmetric seminorms."""
    return rho(r_upp(space, z)), rho(r_low(space, z))


def cone_norm_Q(space, z, variant="l"):
    """``Q = ᵘx`` (into the initial cone) or ``Q = xᵘ`` (into the specific cone)."""
    if variant == "l":
        return l_upp(space, z)
    if variant == "r":
        return r_upp(space, z)
    raise MixedLatticeError("variant must be 'l' or 'r'")


def make_handle(space, name, sets=None):
    """Build a handle from its name; ``sets`` maps set names to base sets."""
    name = str(name).strip()
    head, _, rest = name.partition(":")
    if head == "norm0" and not rest:
        if not isinstance(space, RaySpace):
            raise MixedLatticeError("norm0 needs a ray_cone space")
        return FunctionalHandle(name, space, lambda z: norm0(space, z))
    if head == "sup" and not rest:
        return FunctionalHandle(name, space, sup_norm)
    if head == "bv" and not rest:
        if not isinstance(space, GridSpace):
            raise MixedLatticeError("bv needs a bv_grid space")
        return FunctionalHandle(name, space, bv_norm)
    if head == "gauge" and rest:
        if sets is None or rest not in sets:
            raise MixedLatticeError(f"unknown set {rest!r} for gauge handle")
        return gauge_handle(space, sets[rest], name)
    if head in ("q", "p1", "p2") and rest:
        inner = make_handle(space, rest, sets)
        op = {"q": sym_abs, "p1": r_upp, "p2": r_low}[head]
        return FunctionalHandle(name, space, lambda z: inner(op(space, z)))
    raise MixedLatticeError(f"unknown functional handle {name!r}")


def gauge_handle(space, base, name="gauge"):
    """Gauge of ``MF_1(base)``: greedy test for boxes, exact scan for point sets."""
    if isinstance(base, BoxSet):
        def member(W):
            return box_mf1_member(space, base, W)
    elif isinstance(base, FiniteSet):
        def member(W):
            return mf_member(space, base, W, 1)
    else:
        raise MixedLatticeError("gauge needs a box or a point set")
    return FunctionalHandle(name, space, lambda z: gauge_values(member, z)[0])


# -- seminorm classes ----------------------------------------------------------

def check_seminorm_class(space, p, cls="mixed_lattice", samples=10_000, seed=0,
                         tol=1e-9, radius=DEFAULT_RADIUS):
    """Sampled test of ``p`` being mixed-monotone or a mixed lattice seminorm.

    mixed_monotone: ``0 ≼ x ≤ y ⇒ p(x) <= p(y)`` with ``x = h``, ``y = h + c``.

    mixed_lattice: runs the mixed_monotone check, ``p(s(x)) = p(x)``, and
    ``s(x) ≤ s(y) ⇒ p(x) <= p(y)``.  Comparable pairs come from
    ``y = ±(s(x) + c)``, for which ``s(y) >= y >= s(x)`` always; a second
    stream of independent small-integer pairs evaluates the hypothesis.
    """
    if cls not in ("mixed_monotone", "mixed_lattice"):
        raise MixedLatticeError("class must be mixed_monotone or mixed_lattice")
    n = int(samples)
    rng = law_rng(seed, f"C-{cls}:{p.id}")
    ev = Evaluator(space, tol)
    h = space.sample_specific_cone(rng, n, radius)
    y = h + space.sample_initial_cone(rng, n, radius)
    ev.le_scalar("0 ≼ x ≤ y ⇒ p(x) ≤ p(y)", p(h), p(y), x=h, y=y)
    notes = ""
    if cls == "mixed_lattice":
        x = space.sample_element(rng, n, radius)
        sx = sym_abs(space, x)
        ev.eq_scalar("p(s(x)) = p(x)", p(sx), p(x), x=x)
        sign = np.where(rng.random(n) < 0.5, 1.0, -1.0)[:, None]
        y = sign * (sx + space.sample_initial_cone(rng, n, radius))
        px = p(x)
        ev.le_scalar("s(x) ≤ s(y) ⇒ p(x) ≤ p(y), constructed", px, p(y), x=x, y=y)
        xi = rng.integers(-3, 4, size=(n, space.dim)).astype(np.float64)
        yi = rng.integers(-3, 4, size=(n, space.dim)).astype(np.float64)
        hyp = space.leq_initial(sym_abs(space, xi), sym_abs(space, yi))
        pxi, pyi = p(xi), p(yi)
        ev.implies("s(x) ≤ s(y) ⇒ p(x) ≤ p(y), independent", hyp,
                   np.maximum(pxi - pyi, 0.0), pxi, pyi, x=xi, y=yi)
        notes = f"independent pairs meeting the hypothesis: {int(hyp.sum())}/{n}"
    return ev.report(f"{cls}:{p.id}", n, seed, notes=notes)


# -- cone norm -----------------------------------------------------------------

CONE_AXIOMS = ("restriction_to_C", "positive_homogeneity", "subadditivity",
               "separation", "proper", "monotone_initial", "monotone_specific")


@dataclass
class ConeNormReport:
    variant: str
    samples: int
    seed: int
    tol: float
    axioms: dict

    @property
    def passed(self):
        return all(r is None or r.passed for r in self.axioms.values())

    def to_json(self):
        return {
            "variant": self.variant, "samples": self.samples, "seed": self.seed,
            "tol": self.tol, "passed": self.passed,
            "axioms": {k: ("skipped" if r is None else r.to_json())
                       for k, r in self.axioms.items()},
        }


def _unit_rows(rng, n, dim):
    z = rng.normal(size=(n, dim))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def check_cone_norm(space, variant="l", samples=10_000, seed=0, tol=1e-9,
                    radius=DEFAULT_RADIUS):
    """Axioms of ``Q`` as an asymmetric cone norm, plus properness ``Q(z - Qz) = 0``.

    The target cone is ``V_p`` for variant ``l`` and ``V_sp`` for variant
    ``r``; subadditivity is measured in the target cone's order.  Variant
    ``r`` also checks monotonicity in both orders; variant ``l`` skips it.
    """
    if variant not in ("l", "r"):
        raise MixedLatticeError("variant must be 'l' or 'r'")
    n = int(samples)
    sp = space

    def Q(z):
        return sp._env_up(z, np.zeros_like(z)) if variant == "l" else sp._env_up(np.zeros_like(z), z)

    def target_sample(rng):
        if variant == "l":
            return sp.sample_initial_cone(rng, n, radius)
        return sp.sample_specific_cone(rng, n, radius)

    def target_le(ev, label, lhs, rhs, **inputs):
        (ev.le if variant == "l" else ev.sle)(label, lhs, rhs, **inputs)

    axioms = {}

    def run(name, body):
        ev = Evaluator(sp, tol)
        body(ev, law_rng(seed, f"Q{variant}-{name}"))
        axioms[name] = ev.report(f"Q{variant}:{name}", n, seed)

    def restriction(ev, rng):
        c = target_sample(rng)
        ev.eq("Q(z) = z on the target cone", Q(c), c, z=c)

    def homogeneity(ev, rng):
        z = sp.sample_element(rng, n, radius)
        t = rng.uniform(0.0, 5.0, size=(n, 1))
        t[rng.random(n) < 0.05] = 0.0
        ev.eq("Q(tz) = tQ(z)", Q(t * z), t * Q(z), z=z, t=t[:, 0])

    def subadditivity(ev, rng):
        z, w = (sp.sample_element(rng, n, radius) for _ in range(2))
        target_le(ev, "Q(z+w) ≤ Q(z) + Q(w)", Q(z + w), Q(z) + Q(w), z=z, w=w)

    def separation(ev, rng):
        z = _unit_rows(rng, n, sp.dim)
        size = np.maximum(np.max(np.abs(Q(z)), axis=-1), np.max(np.abs(Q(-z)), axis=-1))
        ev.holds("z ≠ 0 ⇒ Q(z) ≠ 0 or Q(-z) ≠ 0", size > SEPARATION_FLOOR, z=z)

    def proper(ev, rng):
        z = sp.sample_element(rng, n, radius)
        ev.eq("Q(z - Q(z)) = 0", Q(z - Q(z)), np.zeros_like(z), z=z)

    def mono_initial(ev, rng):
        z = sp.sample_element(rng, n, radius)
        w = z + sp.sample_initial_cone(rng, n, radius)
        ev.le("z ≤ w ⇒ Q(z) ≤ Q(w)", Q(z), Q(w), z=z, w=w)

    def mono_specific(ev, rng):
        z = sp.sample_element(rng, n, radius)
        w = z + sp.sample_specific_cone(rng, n, radius)
        ev.sle("z ≼ w ⇒ Q(z) ≼ Q(w)", Q(z), Q(w), z=z, w=w)

    run("restriction_to_C", restriction)
    run("positive_homogeneity", homogeneity)
    run("subadditivity", subadditivity)
    run("separation", separation)
    run("proper", proper)
    if variant == "r":
        run("monotone_initial", mono_initial)
        run("monotone_specific", mono_specific)
    else:
        axioms["monotone_initial"] = axioms["monotone_specific"] = None
    return ConeNormReport(variant, n, int(seed), float(tol), axioms)


# -- asymmetric seminorm pairs ---------------------------------------------------

def check_asym_axioms(space, rho, samples=10_000, seed=0, tol=1e-9, radius=DEFAULT_RADIUS):
    """Separation, positive homogeneity and subadditivity of ``p1``, ``p2``;
    conjugacy ``p1(-z) = p2(z)``; norm axioms for ``p1 + p2``."""
    n = int(samples)
    rng = law_rng(seed, f"A-asym:{rho.id}")
    ev = Evaluator(space, tol)

    def p1(z):
        return rho(r_upp(space, z))

    def p2(z):
        return rho(r_low(space, z))

    def ps(z):
        return p1(z) + p2(z)

    z, w = (space.sample_element(rng, n, radius) for _ in range(2))
    a = rng.uniform(0.0, 5.0, size=n)
    a[rng.random(n) < 0.05] = 0.0
    b = rng.uniform(-5.0, 5.0, size=n)
    u = _unit_rows(rng, n, space.dim)
    for name, p in (("p1", p1), ("p2", p2)):
        pz = p(z)
        ev.le_scalar(f"{name}(z) ≥ 0", np.zeros(n), pz, z=z)
        ev.holds(f"{name}(z) = {name}(-z) = 0 ⇒ z = 0",
                 np.maximum(p(u), p(-u)) > SEPARATION_FLOOR, z=u)
        ev.eq_scalar(f"{name}(az) = a {name}(z)", p(a[:, None] * z), a * pz, z=z, a=a)
        ev.le_scalar(f"{name}(z+w) ≤ {name}(z) + {name}(w)", p(z + w), pz + p(w), z=z, w=w)
    ev.eq_scalar("p1(-z) = p2(z)", p1(-z), p2(z), z=z)
    psz = ps(z)
    ev.eq_scalar("ps(bz) = |b| ps(z)", ps(b[:, None] * z), np.abs(b) * psz, z=z, b=b)
    ev.le_scalar("ps(z+w) ≤ ps(z) + ps(w)", ps(z + w), psz + ps(w), z=z, w=w)
    ev.holds("z ≠ 0 ⇒ ps(z) > 0", ps(u) > SEPARATION_FLOOR, z=u)
    return ev.report(f"asym:{rho.id}", n, seed)


# -- norm0 axioms and Lipschitz-type bounds ------------------------------------

def check_norm0_axioms(space, samples=10_000, seed=0, tol=1e-9, radius=DEFAULT_RADIUS):
    n = int(samples)
    rng = law_rng(seed, "N-norm0")
    ev = Evaluator(space, tol)
    u = _unit_rows(rng, n, space.dim)
    ev.holds("norm0(z) = 0 ⇒ z = 0 (unit z)", norm0(space, u) > SEPARATION_FLOOR, z=u)
    z, w = (space.sample_element(rng, n, radius) for _ in range(2))
    b = rng.uniform(-5.0, 5.0, size=n)
    nz = norm0(space, z)
    ev.eq_scalar("norm0(bz) = |b| norm0(z)", norm0(space, b[:, None] * z), np.abs(b) * nz, z=z, b=b)
    ev.le_scalar("norm0(z+w) ≤ norm0(z) + norm0(w)", norm0(space, z + w),
                 nz + norm0(space, w), z=z, w=w)
    return ev.report("norm0-axioms", n, seed)


def check_lipschitz(space, samples=10_000, seed=0, slack=1e-8, radius=DEFAULT_RADIUS):
    """``norm0(Q x - Q y) <= norm0(x - y) + slack`` for ``Q = xᵘ``.

    The slack is absolute, applied directly to the two norms.
    """
    n = int(samples)
    rng = law_rng(seed, "N-lipschitz")
    x, y = (space.sample_element(rng, n, radius) for _ in range(2))
    lhs = norm0(space, r_upp(space, x) - r_upp(space, y))
    rhs = norm0(space, x - y)
    ev = Evaluator(space, 0.0)
    ev.holds("norm0(xᵘ - yᵘ) ≤ norm0(x - y) + slack", lhs <= rhs + slack, x=x, y=y)
    rep = ev.report("lipschitz:r_upp", n, seed,
                    notes=f"max ratio {_max_ratio(lhs, rhs):.6g}")
    rep.tol = slack
    return rep


def ql_ratio(space, samples=10_000, seed=0, radius=DEFAULT_RADIUS):
    """Observed max of ``norm0(ᵘx - ᵘy) / norm0(x - y)``; recorded, not asserted."""
    n = int(samples)
    rng = law_rng(seed, "N-ql-ratio")
    x, y = (space.sample_element(rng, n, radius) for _ in range(2))
    lhs = norm0(space, l_upp(space, x) - l_upp(space, y))
    return _max_ratio(lhs, norm0(space, x - y))


def _max_ratio(num, den):
    ok = den > 0
    return float(np.max(num[ok] / den[ok])) if np.any(ok) else 0.0


__all__ = [
    "FunctionalHandle", "ConeNormReport", "LawReport", "norm0", "asym_pair",
    "cone_norm_Q", "make_handle", "gauge_handle", "check_seminorm_class",
    "check_cone_norm", "check_asym_axioms", "check_norm0_axioms",
    "check_lipschitz", "ql_ratio", "CONE_AXIOMS",
]
