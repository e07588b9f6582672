"""JSON loading and saving for spaces and base sets."""
import json

import numpy as np

from mixlat.core import MixedLatticeError, ProductRieszSpace, Tolerance
from mixlat.grid import GridSpace
from mixlat.hulls import BoxSet, FiniteSet
from mixlat.ray import RaySpace


def _tolerance(spec):
    try:
        return Tolerance(float(spec.get("atol", 1e-9)), float(spec.get("rtol", 1e-9)))
    except (TypeError, ValueError) as exc:
        raise MixedLatticeError(f"bad tolerance in space description: {exc}") from None


def _require(spec, *keys):
    missing = [k for k in keys if k not in spec]
    if missing:
        raise MixedLatticeError(f"space description is missing {', '.join(missing)}")


def space_from_json(spec):
    """Build a space from its parsed JSON description."""
    if not isinstance(spec, dict) or "type" not in spec:
        raise MixedLatticeError("space description must be an object with a 'type' field")
    kind = spec["type"]
    tol = _tolerance(spec)
    try:
        if kind == "ray_cone":
            _require(spec, "A", "x_hat")
            return RaySpace(spec["A"], spec["x_hat"], tol)
        if kind == "bv_grid":
            _require(spec, "m")
            return GridSpace(_integer(spec["m"], "m"), tol)
        if kind == "product_riesz":
            _require(spec, "n")
            return ProductRieszSpace(_integer(spec["n"], "n"), tol)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, MixedLatticeError):
            raise
        raise MixedLatticeError(f"bad {kind} description: {exc}") from None
    raise MixedLatticeError(f"unknown space type {kind!r}")


def _integer(value, name):
    if isinstance(value, bool) or not isinstance(value, (int, float)) or int(value) != value:
        raise MixedLatticeError(f"{name} must be an integer")
    return int(value)


def set_from_json(spec, space=None):
    """``{"type": "points", "pts": ...}`` or ``{"type": "box", "lo": ..., "hi": ...}``."""
    if not isinstance(spec, dict) or "type" not in spec:
        raise MixedLatticeError("set description must be an object with a 'type' field")
    try:
        if spec["type"] == "points":
            out = FiniteSet(spec["pts"])
            dim = out.points.shape[1]
        elif spec["type"] == "box":
            out = BoxSet(spec["lo"], spec["hi"])
            dim = out.lo.shape[0]
        else:
            raise MixedLatticeError(f"unknown set type {spec['type']!r}")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, MixedLatticeError):
            raise
        raise MixedLatticeError(f"bad set description: {exc}") from None
    if space is not None and dim != space.dim:
        raise MixedLatticeError(f"set dimension {dim} does not match space dimension {space.dim}")
    return out


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise MixedLatticeError(f"{path}: invalid JSON ({exc.msg})") from None


def load_space(path):
    return space_from_json(read_json(path))


def load_set(path, space=None):
    return set_from_json(read_json(path), space)


def _default(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent=2):
    return json.dumps(obj, default=_default, indent=indent, ensure_ascii=False)


def write_json(obj, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
        fh.write("\n")
