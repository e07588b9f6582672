"""Space-generic mixed lattice algebra.

A space supplies two positive cones (initial ``V_p`` and specific
``V_sp``, with ``V_sp`` inside ``V_p``), a native upper envelope
``(u, v) -> min{w : w ≽ u, w ≥ v}`` and samplers for both cones.  Everything
else here (lower envelope, upper/lower parts, generalized absolute values)
is derived from those primitives.

Elements are numpy arrays whose last axis has length ``space.dim``; every
operation broadcasts over leading axes, so a batch of samples is an array of
shape ``(N, dim)``.
"""
from dataclasses import dataclass

import numpy as np

DEFAULT_RADIUS = 10.0


class MixedLatticeError(ValueError):
    """Invalid input to a mixed lattice operation."""


@dataclass(frozen=True)
class Tolerance:
    """Comparison slack ``atol + rtol * scale``."""

    atol: float = 1e-9
    rtol: float = 1e-9

    def __post_init__(self):
        for name in ("atol", "rtol"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1e-3):
                raise MixedLatticeError(f"{name} must lie in [0, 1e-3], got {value!r}")

    def bound(self, scale):
        return self.atol + self.rtol * np.asarray(scale, dtype=np.float64)


def scale_of(*arrays):
    """Largest coordinate magnitude over the operands, per sample."""
    mags = [np.max(np.abs(a), axis=-1) for a in arrays]
    return np.maximum.reduce(np.broadcast_arrays(*mags))


class MixedLatticeSpace:
    """Base class for a concrete finite-dimensional mixed lattice space.

    Subclasses implement ``_env_up`` plus the two cone gaps and samplers.
    A *gap* is a nonnegative number per sample that is zero exactly on the
    cone and grows with the distance from it.
    """

    kind = None

    def __init__(self, dim, tol=None):
        if int(dim) < 1:
            raise MixedLatticeError("dimension must be a positive integer")
        self.dim = int(dim)
        self.tol = tol if tol is not None else Tolerance()

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim})"

    def element(self, x):
        """Validate and return ``x`` as a float array of elements."""
        arr = np.asarray(x, dtype=np.float64)
        if arr.ndim == 0 or arr.shape[-1] != self.dim:
            raise MixedLatticeError(
                f"dimension mismatch: expected last axis {self.dim}, got shape {arr.shape}"
            )
        if not np.all(np.isfinite(arr)):
            raise MixedLatticeError("elements must have finite coordinates")
        return arr

    def zero(self):
        return np.zeros(self.dim)

    # -- primitives supplied by subclasses ---------------------------------
    def _env_up(self, u, v):
        raise NotImplementedError

    def initial_gap(self, z):
        raise NotImplementedError

    def specific_gap(self, z):
        raise NotImplementedError

    def sample_initial_cone(self, rng, size, radius=DEFAULT_RADIUS):
        raise NotImplementedError

    def sample_specific_cone(self, rng, size, radius=DEFAULT_RADIUS):
        raise NotImplementedError

    def split_specific(self, z):
        """Write ``z = a - b`` with ``a, b`` in ``V_sp``.

        Returns ``(a, b, ok)``; rows where ``ok`` is False admit no such
        decomposition (the specific cone does not generate them).
        """
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    # -- shared behaviour ---------------------------------------------------
    def sample_element(self, rng, size, radius=DEFAULT_RADIUS):
        return rng.uniform(-radius, radius, size=(size, self.dim))

    def leq_initial(self, u, v, tol=None):
        tol = tol or self.tol
        return self.initial_gap(v - u) <= tol.bound(scale_of(u, v))

    def leq_specific(self, u, v, tol=None):
        tol = tol or self.tol
        return self.specific_gap(v - u) <= tol.bound(scale_of(u, v))


class ProductRieszSpace(MixedLatticeSpace):
    """``R^n`` with both orders coordinatewise: the degenerate Riesz case."""

    kind = "product_riesz"

    def _env_up(self, u, v):
        return np.maximum(u, v)

    def _env_down(self, u, v):
        return np.minimum(u, v)

    def initial_gap(self, z):
        return np.maximum(-np.min(z, axis=-1), 0.0)

    specific_gap = initial_gap

    def sample_initial_cone(self, rng, size, radius=DEFAULT_RADIUS):
        c = rng.uniform(0.0, radius, size=(size, self.dim))
        return _zero_some(rng, c)

    sample_specific_cone = sample_initial_cone

    def split_specific(self, z):
        z = np.asarray(z, dtype=np.float64)
        return np.maximum(z, 0.0), np.maximum(-z, 0.0), np.ones(z.shape[:-1], dtype=bool)

    def to_json(self):
        return {"type": self.kind, "n": self.dim,
                "atol": self.tol.atol, "rtol": self.tol.rtol}


def _zero_some(rng, c, fraction=0.05):
    """Zero a small fraction of sampled cone rows so equality cases get hit."""
    mask = rng.random(c.shape[0]) < fraction
    c[mask] = 0.0
    return c


# -- envelopes -----------------------------------------------------------------

def env_up(space, u, v):
    """Mixed upper envelope ``u ∨ v = min{w : w ≽ u, w ≥ v}``."""
    u, v = space.element(u), space.element(v)
    return space._env_up(*np.broadcast_arrays(u, v))


def env_down(space, u, v):
    """Mixed lower envelope ``u ∧ v = max{w : w ≼ u, w ≤ v}``, as ``-(-u ∨ -v)``."""
    u, v = space.element(u), space.element(v)
    return -space._env_up(*np.broadcast_arrays(-u, -v)) + 0.0


@dataclass(frozen=True)
class Parts:
    """Upper and lower parts of an element.

    ``l_upp = x ∨ 0``, ``r_upp = 0 ∨ x``, ``l_low = (-x) ∨ 0`` and
    ``r_low = 0 ∨ (-x)``.
    """

    l_upp: np.ndarray
    r_upp: np.ndarray
    l_low: np.ndarray
    r_low: np.ndarray

    def to_json(self):
        return {k: np.asarray(getattr(self, k)).tolist()
                for k in ("l_upp", "r_upp", "l_low", "r_low")}


@dataclass(frozen=True)
class AbsTriple:
    """The asymmetric absolute values and their symmetric average ``s``."""

    ul_abs: np.ndarray
    lu_abs: np.ndarray
    s_abs: np.ndarray

    def to_json(self):
        return {k: np.asarray(getattr(self, k)).tolist()
                for k in ("ul_abs", "lu_abs", "s_abs")}


def parts(space, x):
    x = space.element(x)
    zero = np.zeros_like(x)
    return Parts(
        l_upp=space._env_up(x, zero),
        r_upp=space._env_up(zero, x),
        l_low=space._env_up(-x, zero),
        r_low=space._env_up(zero, -x),
    )


def l_upp(space, x):
    x = space.element(x)
    return space._env_up(x, np.zeros_like(x))


def r_upp(space, x):
    x = space.element(x)
    return space._env_up(np.zeros_like(x), x)


def l_low(space, x):
    return l_upp(space, -np.asarray(x, dtype=np.float64))


def r_low(space, x):
    return r_upp(space, -np.asarray(x, dtype=np.float64))


def sym_abs(space, x):
    """``s(x) = (x ∨ (-x) + (-x) ∨ x) / 2``."""
    x = space.element(x)
    return 0.5 * (space._env_up(x, -x) + space._env_up(-x, x))


def gen_abs(space, x):
    """All three generalized absolute values of ``x``.

    The symmetric value is cross-checked against ``r_upp + r_low``; a
    mismatch beyond the space tolerance raises ``ArithmeticError``.
    """
    x = space.element(x)
    ul = space._env_up(x, -x)
    lu = space._env_up(-x, x)
    s = 0.5 * (ul + lu)
    zero = np.zeros_like(x)
    other = space._env_up(zero, x) + space._env_up(zero, -x)
    gap = np.max(np.abs(s - other), axis=-1)
    if np.any(gap > space.tol.bound(scale_of(x, s, other))):
        raise ArithmeticError("s(x) disagrees with r_upp(x) + r_low(x)")
    return AbsTriple(ul_abs=ul, lu_abs=lu, s_abs=s)


# -- samplers ------------------------------------------------------------------

def sample_element(space, rng, size=1, radius=DEFAULT_RADIUS):
    return space.sample_element(rng, size, radius)


def sample_initial_pair(space, rng, size=1, radius=DEFAULT_RADIUS):
    """Pairs ``(z, z + c)`` with ``c`` in ``V_p``, so ``z <= z + c`` by construction."""
    z = space.sample_element(rng, size, radius)
    return z, z + space.sample_initial_cone(rng, size, radius)


def sample_specific_pair(space, rng, size=1, radius=DEFAULT_RADIUS):
    """Pairs ``(z, z + h)`` with ``h`` in ``V_sp``."""
    z = space.sample_element(rng, size, radius)
    return z, z + space.sample_specific_cone(rng, size, radius)
