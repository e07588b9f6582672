"""Property tests over hypothesis-generated elements."""
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from mixlat.core import (ProductRieszSpace, env_down, env_up, l_low, l_upp, r_low,
                         r_upp, sym_abs)
from mixlat.grid import GridSpace
from mixlat.hulls import FiniteSet, ms_member, mf_member
from mixlat.io import space_from_json
from mixlat.norms import norm0
from mixlat.ray import RaySpace

QUADRANT = RaySpace(np.eye(2), [1.0, 1.0])
R3 = RaySpace([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, -1]], [1.0, 1.0, 1.0])
G4 = GridSpace(3)
P3 = ProductRieszSpace(3)
SPACES = (QUADRANT, R3, G4, P3)

coord = st.floats(-100, 100, allow_nan=False, allow_infinity=False, width=64)


def vec(dim):
    return arrays(np.float64, dim, elements=coord)


@st.composite
def space_and(draw, count):
    sp = draw(st.sampled_from(SPACES))
    return (sp, *[draw(vec(sp.dim)) for _ in range(count)])


def close(a, b, *scale):
    size = max([1.0] + [float(np.max(np.abs(s))) for s in (a, b, *scale)])
    return np.max(np.abs(np.asarray(a) - np.asarray(b))) <= 1e-9 * size


@settings(max_examples=200, deadline=None)
@given(space_and(2))
def test_envelope_bounds(args):
    sp, u, v = args
    w = env_up(sp, u, v)
    assert sp.leq_specific(u, w) and sp.leq_initial(v, w)
    d = env_down(sp, u, v)
    assert sp.leq_specific(d, u) and sp.leq_initial(d, v)
    assert close(w + env_down(sp, v, u), u + v, u, v)


@settings(max_examples=200, deadline=None)
@given(space_and(1))
def test_decompositions(args):
    sp, x = args
    assert close(x, r_upp(sp, x) - l_low(sp, x), x)
    assert close(x, l_upp(sp, x) - r_low(sp, x), x)
    s = sym_abs(sp, x)
    assert close(s, r_upp(sp, x) + r_low(sp, x), x)
    assert close(s, sym_abs(sp, -x), x)
    assert close(sym_abs(sp, s), s, x)


@settings(max_examples=200, deadline=None)
@given(space_and(1), st.floats(-20, 20))
def test_s_is_absolutely_homogeneous(args, a):
    sp, x = args
    assert close(sym_abs(sp, a * x), abs(a) * sym_abs(sp, x), a * x)


@settings(max_examples=100, deadline=None)
@given(arrays(np.float64, (2, 4), elements=coord))
def test_grid_envelope_is_least(fg):
    f, g = fg
    up = env_up(G4, f, g)
    # any feasible w = f + h, h nonnegative nondecreasing, w >= g, lies above
    h = np.maximum.accumulate(np.maximum(g - f, 0.0)) + np.linspace(0.0, 1.0, 4)
    assert np.all(up <= f + h + 1e-9)
    assert np.all(up[1:] - f[1:] >= up[:-1] - f[:-1] - 1e-9)


@settings(max_examples=100, deadline=None)
@given(vec(2), vec(2))
def test_norm0_triangle(x, y):
    assert norm0(QUADRANT, x + y) <= norm0(QUADRANT, x) + norm0(QUADRANT, y) + 1e-9 * (1 + np.abs([x, y]).max())


@settings(max_examples=100, deadline=None)
@given(arrays(np.float64, (3, 2), elements=st.floats(-5, 5)), vec(2))
def test_hull_conjugacy(pts, y):
    A = FiniteSet(np.vstack([pts, -pts]))
    assert mf_member(QUADRANT, A, y, 1) == mf_member(QUADRANT, A, -y, 2)
    assert ms_member(QUADRANT, A, y, 1) == ms_member(QUADRANT, A, -y, 2)


@given(st.sampled_from(SPACES))
def test_space_json_round_trip(sp):
    again = space_from_json(sp.to_json())
    assert again.to_json() == sp.to_json()
