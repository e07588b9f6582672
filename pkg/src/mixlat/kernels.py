"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the numpy
fallback.  Set ``MIXLAT_PURE_PYTHON=1`` to force the fallback.
"""
import os

import numpy as np

from mixlat import _pykernels

try:
    if os.environ.get("MIXLAT_PURE_PYTHON"):
        raise ImportError("pure-python backend requested")
    from mixlat import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

BACKEND = "cython" if _ckernels is not None else "python"
_impl = BACKENDS[BACKEND]


def backend(name=None):
    """Return the kernel module called ``name`` (default: the active one)."""
    if name is None:
        return _impl
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available") from None


def _rows(a):
    a = np.ascontiguousarray(a, dtype=np.float64)
    return a.reshape(-1, a.shape[-1])


def ray_shift(A, denom, D):
    D = np.asarray(D, dtype=np.float64)
    return _impl.ray_shift(A, denom, _rows(D)).reshape(D.shape[:-1])


def ray_extent(A, denom, D):
    D = np.asarray(D, dtype=np.float64)
    return _impl.ray_extent(A, denom, _rows(D)).reshape(D.shape[:-1])


def grid_envelope(F, G):
    F, G = np.broadcast_arrays(np.asarray(F, dtype=np.float64),
                               np.asarray(G, dtype=np.float64))
    return _impl.grid_envelope(_rows(F), _rows(G)).reshape(F.shape)


def box_mf1_member(Z, lo, hi, bound):
    Z = np.asarray(Z, dtype=np.float64)
    bound = np.broadcast_to(np.asarray(bound, dtype=np.float64), Z.shape[:-1])
    out = _impl.box_mf1_member(_rows(Z), np.ascontiguousarray(lo, dtype=np.float64),
                               np.ascontiguousarray(hi, dtype=np.float64),
                               np.ascontiguousarray(bound.reshape(-1)))
    return np.asarray(out, dtype=bool).reshape(Z.shape[:-1])


def dominated_pairs(S, left, right):
    return _impl.dominated_pairs(_rows(S), np.ascontiguousarray(left, dtype=np.float64),
                                 np.ascontiguousarray(right, dtype=np.float64))
