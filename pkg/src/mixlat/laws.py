"""Seeded law checking for mixed lattice spaces.

Each law draws a batch of inputs, evaluates both sides with the space's
primitives and measures the violation per sample.  Order-constrained inputs
are built, never rejection-sampled: ``x <= x + c`` with ``c`` from the
initial cone and ``x ≼ x + h`` with ``h`` from the specific cone.

A sample fails when its raw violation exceeds ``tol * (1 + scale)``, where
``scale`` is the largest coordinate magnitude among the sample's inputs and
both sides.  Reported violations are normalized the same way, so a report
has failures exactly when ``max_violation > tol``.
"""
import zlib
from dataclasses import dataclass, field

import numpy as np

from mixlat.core import DEFAULT_RADIUS, MixedLatticeError

RNG_NAME = "numpy.PCG64"
RNG_STREAM_VERSION = 1
MAX_WITNESSES = 20

LAW_IDS = (
    "L-P0", "L-P1", "L-P2", "L-P3", "L-P4", "L-P5A", "L-P5B", "L-P6", "L-P7",
    "L-P8A", "L-P8B",
    *(f"L-T24{c}" for c in "abcdefghijklm"),
    *(f"L-T26{c}" for c in "abcdef"),
    "L-L27",
)

LAW_NOTES = {
    "L-P6": "monotonicity read with distinct left arguments: x ≼ y ⇒ z∨x ≼ z∨y and z∧x ≼ z∧y",
    "L-P5A": "forward direction on constructed pairs; converse in equational form w = y∨x",
    "L-P5B": "forward direction on constructed pairs; converse in equational form w = x∨y",
}


def law_rng(seed, stream):
    """Generator for one named stream; identical for identical (seed, stream)."""
    if int(seed) < 0:
        raise MixedLatticeError("seed must be a nonnegative integer")
    key = zlib.crc32(str(stream).encode("utf-8"))
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed), key])))


@dataclass
class LawReport:
    law: str
    samples: int
    seed: int
    tol: float
    max_violation: float
    failures: list = field(default_factory=list)
    failure_count: int = 0
    space: str = ""
    notes: str = ""

    @property
    def passed(self):
        return self.failure_count == 0

    def to_json(self):
        out = {
            "law": self.law,
            "samples": self.samples,
            "seed": self.seed,
            "tol": self.tol,
            "max_violation": self.max_violation,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "rng": {"name": RNG_NAME, "version": RNG_STREAM_VERSION},
        }
        if self.space:
            out["space"] = self.space
        if self.notes:
            out["notes"] = self.notes
        return out


def _rowmax(a):
    a = np.asarray(a, dtype=np.float64)
    return np.abs(a) if a.ndim == 1 else np.max(np.abs(a), axis=-1)


class Evaluator:
    """Collects per-sample violations of named checks over one batch."""

    def __init__(self, space, tol):
        self.space = space
        self.tol = float(tol)
        self.checks = []

    def _add(self, label, raw, lhs, rhs, inputs):
        scales = [_rowmax(v) for v in inputs.values()]
        scales += [_rowmax(lhs), _rowmax(rhs)]
        scale = np.maximum.reduce(np.broadcast_arrays(*scales))
        self.checks.append((label, np.asarray(raw, dtype=np.float64), scale, lhs, rhs, inputs))

    def eq(self, label, lhs, rhs, **inputs):
        lhs, rhs = np.broadcast_arrays(lhs, rhs)
        self._add(label, _rowmax(lhs - rhs), lhs, rhs, inputs)

    def le(self, label, lhs, rhs, **inputs):
        lhs, rhs = np.broadcast_arrays(lhs, rhs)
        self._add(label, self.space.initial_gap(rhs - lhs), lhs, rhs, inputs)

    def sle(self, label, lhs, rhs, **inputs):
        lhs, rhs = np.broadcast_arrays(lhs, rhs)
        self._add(label, self.space.specific_gap(rhs - lhs), lhs, rhs, inputs)

    def le_scalar(self, label, lhs, rhs, **inputs):
        lhs, rhs = np.broadcast_arrays(np.asarray(lhs, float), np.asarray(rhs, float))
        self._add(label, np.maximum(lhs - rhs, 0.0), lhs, rhs, inputs)

    def eq_scalar(self, label, lhs, rhs, **inputs):
        lhs, rhs = np.broadcast_arrays(np.asarray(lhs, float), np.asarray(rhs, float))
        self._add(label, np.abs(lhs - rhs), lhs, rhs, inputs)

    def iff(self, label, gap_a, gap_b, **inputs):
        """Both gaps within tolerance, or both beyond it."""
        scale = np.maximum.reduce(np.broadcast_arrays(*[_rowmax(v) for v in inputs.values()]))
        bound = self.tol * (1.0 + scale)
        disagree = (gap_a <= bound) != (gap_b <= bound)
        raw = np.where(disagree, np.maximum(gap_a, gap_b), 0.0)
        self._add(label, raw, gap_a, gap_b, inputs)

    def implies(self, label, hyp, raw, lhs, rhs, **inputs):
        """Violation ``raw`` counted only where the boolean ``hyp`` holds."""
        self._add(label, np.where(hyp, raw, 0.0), lhs, rhs, inputs)

    def holds(self, label, ok, **inputs):
        """Boolean check: each failing sample counts with violation 1."""
        ok = np.asarray(ok, dtype=bool)
        flag = ok.astype(np.float64)
        self.checks.append((label, (~ok).astype(np.float64), np.zeros(ok.shape),
                            flag, np.ones(ok.shape), inputs))

    def report(self, law, samples, seed, notes=""):
        failures, count, worst = [], 0, 0.0
        for label, raw, scale, lhs, rhs, inputs in self.checks:
            viol = raw / (1.0 + scale)
            if viol.size:
                worst = max(worst, float(np.max(viol)))
            bad = np.nonzero(viol > self.tol)[0]
            count += int(bad.size)
            for r in bad[: max(0, MAX_WITNESSES - len(failures))]:
                failures.append({
                    "check": label,
                    "inputs": {k: _tolist(v[r]) for k, v in inputs.items()},
                    "lhs": _tolist(lhs[r]),
                    "rhs": _tolist(rhs[r]),
                    "delta": float(viol[r]),
                })
        return LawReport(law=law, samples=int(samples), seed=int(seed), tol=self.tol,
                         max_violation=worst, failures=failures, failure_count=count,
                         space=self.space.kind or "", notes=notes)


def _tolist(v):
    v = np.asarray(v)
    return v.tolist() if v.ndim else float(v)


# -- the algebra, shortened for the law bodies ---------------------------------

class _Ops:
    def __init__(self, space):
        self.space = space
        self.up = space._env_up

    def dn(self, u, v):
        native = getattr(self.space, "_env_down", None)
        if native is not None:
            return native(u, v)
        return -self.up(-u, -v)

    def l_upp(self, x):
        return self.up(x, np.zeros_like(x))

    def r_upp(self, x):
        return self.up(np.zeros_like(x), x)

    def l_low(self, x):
        return self.up(-x, np.zeros_like(x))

    def r_low(self, x):
        return self.up(np.zeros_like(x), -x)

    def ul(self, x):
        return self.up(x, -x)

    def lu(self, x):
        return self.up(-x, x)

    def s(self, x):
        return 0.5 * (self.up(x, -x) + self.up(-x, x))


def _norm(a):
    return np.max(np.abs(a), axis=-1)


def _scalars(rng, n, lo, hi, specials=()):
    a = rng.uniform(lo, hi, size=n)
    pick = rng.random(n)
    for i, value in enumerate(specials):
        a[(pick >= 0.05 * i) & (pick < 0.05 * (i + 1))] = value
    return a[:, None]


def _mixed(space, rng, n, radius, cone):
    """Half random elements, half drawn from ``cone`` ('p', 'sp' or 'zero')."""
    x = space.sample_element(rng, n, radius)
    take = rng.random(n) < 0.5
    if cone == "p":
        alt = space.sample_initial_cone(rng, n, radius)
    elif cone == "sp":
        alt = space.sample_specific_cone(rng, n, radius)
    else:
        alt = np.zeros_like(x)
    return np.where(take[:, None], alt, x)


LAWS = {}


def law(law_id):
    def register(fn):
        LAWS[law_id] = fn
        return fn
    return register


@law("L-P0")
def _p0(ev, op, rng, n, R):
    x, y = (op.space.sample_element(rng, n, R) for _ in range(2))
    lo, hi = op.dn(x, y), op.up(x, y)
    ev.sle("x∧y ≼ x", lo, x, x=x, y=y)
    ev.sle("x ≼ x∨y", x, hi, x=x, y=y)
    ev.le("x∧y ≤ y", lo, y, x=x, y=y)
    ev.le("y ≤ x∨y", y, hi, x=x, y=y)


@law("L-P1")
def _p1(ev, op, rng, n, R):
    x, y = (op.space.sample_element(rng, n, R) for _ in range(2))
    ev.eq("x∨y + y∧x = x+y", op.up(x, y) + op.dn(y, x), x + y, x=x, y=y)


@law("L-P2")
def _p2(ev, op, rng, n, R):
    x, y, z = (op.space.sample_element(rng, n, R) for _ in range(3))
    ev.eq("z + x∨y = (x+z)∨(y+z)", z + op.up(x, y), op.up(x + z, y + z), x=x, y=y, z=z)
    ev.eq("z + x∧y = (x+z)∧(y+z)", z + op.dn(x, y), op.dn(x + z, y + z), x=x, y=y, z=z)


@law("L-P3")
def _p3(ev, op, rng, n, R):
    x, y = (op.space.sample_element(rng, n, R) for _ in range(2))
    ev.eq("x∨y = -(-x ∧ -y)", op.up(x, y), -op.dn(-x, -y), x=x, y=y)


@law("L-P4")
def _p4(ev, op, rng, n, R):
    sp = op.space
    x, y = (sp.sample_element(rng, n, R) for _ in range(2))
    u = x + sp.sample_specific_cone(rng, n, R)
    v = y + sp.sample_initial_cone(rng, n, R)
    ev.le("x∨y ≤ u∨v", op.up(x, y), op.up(u, v), x=x, y=y, u=u, v=v)
    ev.le("x∧y ≤ u∧v", op.dn(x, y), op.dn(u, v), x=x, y=y, u=u, v=v)


@law("L-P5A")
def _p5a(ev, op, rng, n, R):
    sp = op.space
    x = sp.sample_element(rng, n, R)
    y = x + sp.sample_initial_cone(rng, n, R)
    ev.eq("x ≤ y ⇒ y∨x = y", op.up(y, x), y, x=x, y=y)
    ev.eq("x ≤ y ⇒ x∧y = x", op.dn(x, y), x, x=x, y=y)
    p, q = (sp.sample_element(rng, n, R) for _ in range(2))
    w = op.up(q, p)
    ev.le("p ≤ q∨p", p, w, p=p, q=q)
    ev.eq("w = q∨p ⇒ w∨p = w", op.up(w, p), w, p=p, q=q)


@law("L-P5B")
def _p5b(ev, op, rng, n, R):
    sp = op.space
    x = sp.sample_element(rng, n, R)
    y = x + sp.sample_specific_cone(rng, n, R)
    ev.eq("x ≼ y ⇒ x∨y = y", op.up(x, y), y, x=x, y=y)
    ev.eq("x ≼ y ⇒ y∧x = x", op.dn(y, x), x, x=x, y=y)
    p, q = (sp.sample_element(rng, n, R) for _ in range(2))
    w = op.up(p, q)
    ev.eq("w = p∨q ⇒ p∨w = w", op.up(p, w), w, p=p, q=q)
    w2 = op.dn(q, p)
    ev.eq("w = q∧p ⇒ q∧w = w", op.dn(q, w2), w2, p=p, q=q)


@law("L-P6")
def _p6(ev, op, rng, n, R):
    sp = op.space
    x, z = (sp.sample_element(rng, n, R) for _ in range(2))
    y = x + sp.sample_specific_cone(rng, n, R)
    ev.sle("z∨x ≼ z∨y", op.up(z, x), op.up(z, y), x=x, y=y, z=z)
    ev.sle("z∧x ≼ z∧y", op.dn(z, x), op.dn(z, y), x=x, y=y, z=z)


@law("L-P7")
def _p7(ev, op, rng, n, R):
    sp = op.space
    u = sp.sample_element(rng, n, R)
    h1, h2, h3 = (sp.sample_specific_cone(rng, n, R) for _ in range(3))
    x, y, z = u + h1, u + h2, u + h1 + h2 + h3
    ev.sle("x∨y ≼ z", op.up(x, y), z, u=u, x=x, y=y, z=z)
    ev.sle("u ≼ x∧y", u, op.dn(x, y), u=u, x=x, y=y, z=z)


@law("L-P8A")
def _p8a(ev, op, rng, n, R):
    x, y = (op.space.sample_element(rng, n, R) for _ in range(2))
    a = _scalars(rng, n, 0.0, 5.0, specials=(0.0, 1.0))
    ev.eq("(ax)∧(ay) = a(x∧y)", op.dn(a * x, a * y), a * op.dn(x, y), x=x, y=y, a=a[:, 0])
    ev.eq("(ax)∨(ay) = a(x∨y)", op.up(a * x, a * y), a * op.up(x, y), x=x, y=y, a=a[:, 0])


@law("L-P8B")
def _p8b(ev, op, rng, n, R):
    x, y = (op.space.sample_element(rng, n, R) for _ in range(2))
    a = -_scalars(rng, n, 1e-3, 5.0, specials=(1.0,))
    ev.eq("(ax)∧(ay) = a(x∨y)", op.dn(a * x, a * y), a * op.up(x, y), x=x, y=y, a=a[:, 0])
    ev.eq("(ax)∨(ay) = a(x∧y)", op.up(a * x, a * y), a * op.dn(x, y), x=x, y=y, a=a[:, 0])


@law("L-T24a")
def _t24a(ev, op, rng, n, R):
    x = op.space.sample_element(rng, n, R)
    ev.eq("ᵘx = ˡ(-x)", op.l_upp(x), op.l_low(-x), x=x)
    ev.eq("xᵘ = (-x)ˡ", op.r_upp(x), op.r_low(-x), x=x)


@law("L-T24b")
def _t24b(ev, op, rng, n, R):
    x = op.space.sample_element(rng, n, R)
    ev.eq("x = xᵘ - ˡx", x, op.r_upp(x) - op.l_low(x), x=x)
    ev.eq("x = ᵘx - xˡ", x, op.l_upp(x) - op.r_low(x), x=x)


@law("L-T24c")
def _t24c(ev, op, rng, n, R):
    x = op.space.sample_element(rng, n, R)
    lu_, ru, ll, rl = op.l_upp(x), op.r_upp(x), op.l_low(x), op.r_low(x)
    ul, lu = op.ul(x), op.lu(x)
    ev.eq("ᵘ|x|ˡ = ᵘx ∨ xˡ", ul, op.up(lu_, rl), x=x)
    ev.eq("ᵘ|x|ˡ = ᵘx + xˡ", ul, lu_ + rl, x=x)
    ev.eq("ˡ|x|ᵘ = ˡx ∨ xᵘ", lu, op.up(ll, ru), x=x)
    ev.eq("ˡ|x|ᵘ = ˡx + xᵘ", lu, ll + ru, x=x)


@law("L-T24d")
def _t24d(ev, op, rng, n, R):
    x = op.space.sample_element(rng, n, R)
    ev.eq("ᵘ|x|ˡ = ˡ|-x|ᵘ", op.ul(x), op.lu(-x), x=x)


@law("L-T24e")
def _t24e(ev, op, rng, n, R):
    x, y = (op.space.sample_element(rng, n, R) for _ in range(2))
    ev.le("ᵘ(x+y) ≤ ᵘx + ᵘy", op.l_upp(x + y), op.l_upp(x) + op.l_upp(y), x=x, y=y)
    ev.le("(x+y)ˡ ≤ xˡ + yˡ", op.r_low(x + y), op.r_low(x) + op.r_low(y), x=x, y=y)
    ev.le("ᵘ|x+y|ˡ ≤ ᵘ|x|ˡ + ᵘ|y|ˡ", op.ul(x + y), op.ul(x) + op.ul(y), x=x, y=y)


@law("L-T24f")
def _t24f(ev, op, rng, n, R):
    x, y = (op.space.sample_element(rng, n, R) for _ in range(2))
    ev.le("(x+y)ᵘ ≤ xᵘ + yᵘ", op.r_upp(x + y), op.r_upp(x) + op.r_upp(y), x=x, y=y)
    ev.le("ˡ(x+y) ≤ ˡx + ˡy", op.l_low(x + y), op.l_low(x) + op.l_low(y), x=x, y=y)
    ev.le("ˡ|x+y|ᵘ ≤ ˡ|x|ᵘ + ˡ|y|ᵘ", op.lu(x + y), op.lu(x) + op.lu(y), x=x, y=y)


@law("L-T24g")
def _t24g(ev, op, rng, n, R):
    x = op.space.sample_element(rng, n, R)
    zero = np.zeros_like(x)
    ev.eq("xᵘ ∧ ˡx = 0", op.dn(op.r_upp(x), op.l_low(x)), zero, x=x)
    ev.eq("xˡ ∧ ᵘx = 0", op.dn(op.r_low(x), op.l_upp(x)), zero, x=x)


@law("L-T24h")
def _t24h(ev, op, rng, n, R):
    x = op.space.sample_element(rng, n, R)
    lu_, ru, ll, rl = op.l_upp(x), op.r_upp(x), op.l_low(x), op.r_low(x)
    ev.eq("xᵘ ∨ ˡx = ᵘx + ˡx", op.up(ru, ll), lu_ + ll, x=x)
    ev.eq("ᵘx + ˡx = xˡ + xᵘ", lu_ + ll, rl + ru, x=x)
    ev.eq("xˡ + xᵘ = xˡ ∨ ᵘx", rl + ru, op.up(rl, lu_), x=x)


@law("L-T24i")
def _t24i(ev, op, rng, n, R):
    sp = op.space
    h = sp.sample_specific_cone(rng, n, R)
    zero = np.zeros_like(h)
    for name, val in (("ˡ|x|ᵘ", op.lu(h)), ("ᵘ|x|ˡ", op.ul(h)),
                      ("ᵘx", op.l_upp(h)), ("xᵘ", op.r_upp(h))):
        ev.eq(f"x ≽ 0 ⇒ x = {name}", h, val, x=h)
    ev.eq("x ≽ 0 ⇒ ˡx = 0", op.l_low(h), zero, x=h)
    ev.eq("x ≽ 0 ⇒ xˡ = 0", op.r_low(h), zero, x=h)
    x = _mixed(sp, rng, n, R, "sp")
    concl = np.max([_norm(x - op.lu(x)), _norm(x - op.ul(x)), _norm(x - op.l_upp(x)),
                    _norm(x - op.r_upp(x)), _norm(op.l_low(x)), _norm(op.r_low(x))], axis=0)
    ev.iff("x ≽ 0 ⟺ identities", sp.specific_gap(x), concl, x=x)


@law("L-T24j")
def _t24j(ev, op, rng, n, R):
    sp = op.space
    c = sp.sample_initial_cone(rng, n, R)
    ev.eq("x ≥ 0 ⇒ x = ᵘ|x|ˡ", c, op.ul(c), x=c)
    ev.eq("x ≥ 0 ⇒ x = ᵘx", c, op.l_upp(c), x=c)
    ev.eq("x ≥ 0 ⇒ xˡ = 0", op.r_low(c), np.zeros_like(c), x=c)
    x = _mixed(sp, rng, n, R, "p")
    concl = np.max([_norm(x - op.ul(x)), _norm(x - op.l_upp(x)), _norm(op.r_low(x))], axis=0)
    ev.iff("x ≥ 0 ⟺ identities", sp.initial_gap(x), concl, x=x)


@law("L-T24k")
def _t24k(ev, op, rng, n, R):
    sp = op.space
    x = sp.sample_element(rng, n, R)
    zero = np.zeros_like(x)
    ev.le("ᵘ|x|ˡ ≥ 0", zero, op.ul(x), x=x)
    ev.le("ˡ|x|ᵘ ≥ 0", zero, op.lu(x), x=x)
    x = _mixed(sp, rng, n, R, "zero")
    gap = np.maximum(_norm(op.ul(x)), _norm(op.lu(x)))
    ev.iff("ᵘ|x|ˡ = ˡ|x|ᵘ = 0 ⟺ x = 0", gap, _norm(x), x=x)


@law("L-T24l")
def _t24l(ev, op, rng, n, R):
    x = op.space.sample_element(rng, n, R)
    a = _scalars(rng, n, 0.0, 5.0, specials=(0.0, 1.0))
    ev.eq("ᵘ|ax|ˡ = a ᵘ|x|ˡ", op.ul(a * x), a * op.ul(x), x=x, a=a[:, 0])
    ev.eq("ˡ|ax|ᵘ = a ˡ|x|ᵘ", op.lu(a * x), a * op.lu(x), x=x, a=a[:, 0])


@law("L-T24m")
def _t24m(ev, op, rng, n, R):
    x = op.space.sample_element(rng, n, R)
    a = -_scalars(rng, n, 1e-3, 5.0, specials=(1.0,))
    ev.eq("ᵘ|ax|ˡ = |a| ˡ|x|ᵘ", op.ul(a * x), -a * op.lu(x), x=x, a=a[:, 0])
    ev.eq("ˡ|ax|ᵘ = |a| ᵘ|x|ˡ", op.lu(a * x), -a * op.ul(x), x=x, a=a[:, 0])


@law("L-T26a")
def _t26a(ev, op, rng, n, R):
    x = op.space.sample_element(rng, n, R)
    s = op.s(x)
    lu_, ru, ll, rl = op.l_upp(x), op.r_upp(x), op.l_low(x), op.r_low(x)
    ev.eq("s(x) = xᵘ ∨ ˡx", s, op.up(ru, ll), x=x)
    ev.eq("s(x) = ᵘx + ˡx", s, lu_ + ll, x=x)
    ev.eq("s(x) = xˡ + xᵘ", s, rl + ru, x=x)
    ev.eq("s(x) = xˡ ∨ ᵘx", s, op.up(rl, lu_), x=x)


@law("L-T26b")
def _t26b(ev, op, rng, n, R):
    x = op.space.sample_element(rng, n, R)
    a = _scalars(rng, n, -5.0, 5.0, specials=(0.0, 1.0, -1.0))
    ev.eq("s(ax) = |a| s(x)", op.s(a * x), np.abs(a) * op.s(x), x=x, a=a[:, 0])


@law("L-T26c")
def _t26c(ev, op, rng, n, R):
    sp = op.space
    x = sp.sample_element(rng, n, R)
    s = op.s(x)
    zero = np.zeros_like(x)
    ev.sle("s(x) ≽ 0", zero, s, x=x)
    ev.le("s(x) ≥ 0", zero, s, x=x)
    x = _mixed(sp, rng, n, R, "zero")
    ev.iff("s(x) = 0 ⟺ x = 0", _norm(op.s(x)), _norm(x), x=x)


@law("L-T26d")
def _t26d(ev, op, rng, n, R):
    sp = op.space
    h = sp.sample_specific_cone(rng, n, R)
    ev.eq("x ≽ 0 ⇒ x = s(x)", h, op.s(h), x=h)
    ev.eq("x ≽ 0 ⇒ x = xᵘ", h, op.r_upp(h), x=h)
    x = _mixed(sp, rng, n, R, "sp")
    concl = np.maximum(_norm(x - op.s(x)), _norm(x - op.r_upp(x)))
    ev.iff("x ≽ 0 ⟺ x = s(x) = xᵘ", sp.specific_gap(x), concl, x=x)


@law("L-T26e")
def _t26e(ev, op, rng, n, R):
    x = op.space.sample_element(rng, n, R)
    s = op.s(x)
    ev.eq("s(s(x)) = s(x)", op.s(s), s, x=x)


@law("L-T26f")
def _t26f(ev, op, rng, n, R):
    x, y = (op.space.sample_element(rng, n, R) for _ in range(2))
    ev.le("s(x+y) ≤ s(x) + s(y)", op.s(x + y), op.s(x) + op.s(y), x=x, y=y)


@law("L-L27")
def _l27(ev, op, rng, n, R):
    x, y = (op.space.sample_element(rng, n, R) for _ in range(2))
    ev.le("s(xᵘ - yᵘ) ≤ s(x - y)", op.s(op.r_upp(x) - op.r_upp(y)), op.s(x - y), x=x, y=y)


assert set(LAWS) == set(LAW_IDS)


def check_law(space, law_id, samples=10_000, seed=0, tol=1e-9, radius=DEFAULT_RADIUS):
    """Run one law on ``samples`` seeded draws and return a ``LawReport``."""
    if law_id not in LAWS:
        raise MixedLatticeError(f"unknown law id {law_id!r}")
    if int(samples) < 1:
        raise MixedLatticeError("samples must be at least 1")
    if tol < 0:
        raise MixedLatticeError("tol must be nonnegative")
    rng = law_rng(seed, law_id)
    ev = Evaluator(space, tol)
    LAWS[law_id](ev, _Ops(space), rng, int(samples), float(radius))
    return ev.report(law_id, samples, seed, notes=LAW_NOTES.get(law_id, ""))


def check_all_laws(space, samples=10_000, seed=0, tol=1e-9, radius=DEFAULT_RADIUS):
    return [check_law(space, lid, samples, seed, tol, radius) for lid in LAW_IDS]
