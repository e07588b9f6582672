import itertools

import numpy as np
import pytest

from mixlat.core import MixedLatticeError
from mixlat.grid import GridSpace
from mixlat.hulls import (BoxSet, FiniteSet, box_gauge, box_mf1_member,
                          check_absorbency, check_gauge_monotone, check_hull_props,
                          gauge_bisect, gauge_values, mf1_box_gauge, mf_member,
                          ms_absorb_search, ms_member, sh_member)
from mixlat.laws import law_rng

from oracles import box_mf1_bruteforce


def test_mf_member_examples(quadrant):
    A = FiniteSet([[0, 0], [3, 1]])
    assert mf_member(quadrant, A, [1, 1], 1)
    assert not mf_member(quadrant, A, [2, 2], 1)
    for y in A.points:
        assert mf_member(quadrant, A, y, 1) and mf_member(quadrant, A, y, 2)
    with pytest.raises(MixedLatticeError):
        mf_member(quadrant, A, [1, 1], 3)


def test_ms_member_examples(quadrant):
    A = FiniteSet([[1, -2]])
    assert ms_member(quadrant, A, [2, 2], 1)
    assert not ms_member(quadrant, A, [1, 0], 1)
    assert ms_member(quadrant, A, [0, 0], 1) and ms_member(quadrant, A, [0, 0], 2)


def test_sh_member_examples(quadrant):
    A = FiniteSet([[1, -2]])
    assert sh_member(quadrant, A, [1, 0])
    assert not sh_member(quadrant, A, [4, 0])
    assert sh_member(quadrant, A, [1, -2])


def test_finite_and_box_sets_validate():
    with pytest.raises(MixedLatticeError):
        FiniteSet(np.zeros((0, 2)))
    with pytest.raises(MixedLatticeError):
        BoxSet([0.5, -1], [1, 1])
    with pytest.raises(MixedLatticeError):
        BoxSet([-1, -1], [1])
    assert BoxSet.symmetric(3, 2.0).to_json() == {"type": "box", "lo": [-2.0] * 3, "hi": [2.0] * 3}


U3 = BoxSet.symmetric(3)


@pytest.mark.parametrize("z, expected", [
    ([0.5, 1.5, 2.0], False),
    ([0.0, -0.5, -0.5], True),
    ([0.25, 1.0, -1.0], True),
    ([-1.5, 0.5, 1.0], False),
    ([1.0, -2.0, 0.75], False),
])
def test_box_mf1_examples(grid3, z, expected):
    assert bool(box_mf1_member(grid3, U3, z)) is expected
    assert box_mf1_bruteforce(z, U3.lo, U3.hi) is expected


def test_box_mf1_matches_bruteforce_on_lattice(grid3):
    """Asymmetric box, every quarter-lattice point in a window."""
    U = BoxSet([-1.0, -0.5, -2.0], [0.5, 1.0, 1.5])
    vals = np.arange(-2.5, 2.51, 0.5)
    for z in itertools.product(vals, repeat=3):
        assert bool(box_mf1_member(grid3, U, z)) == box_mf1_bruteforce(z, U.lo, U.hi), z


def test_box_mf1_needs_grid(quadrant):
    with pytest.raises(MixedLatticeError):
        box_mf1_member(quadrant, BoxSet.symmetric(2), [0, 0])


def test_box_gauge_examples():
    member = U3.contains
    res = gauge_bisect(member, [2, 1, 0])
    assert res.value == pytest.approx(2.0, abs=1e-9)
    assert res.iterations == 80
    assert box_gauge(U3, [2, 1, 0]) == 2.0
    assert gauge_bisect(member, [0, 0, 0]).value == 0.0


def test_gauge_bracket_shrinks():
    res = gauge_bisect(U3.contains, [3.0, -1.0, 0.5])
    t_hi = 2.0 ** 10 * 4.0
    assert res.bracket_width <= 2.0 ** -60 * t_hi


def test_gauge_not_absorbed():
    with pytest.raises(MixedLatticeError, match="not absorbed"):
        gauge_bisect(U3.contains, [5.0, 0.0, 0.0], t_hi=2.0)


def test_gauge_star_shape_spot_check():
    def holed(W):
        r = np.max(np.abs(W), axis=-1)
        return (r <= 1.0) & ~((r > 0.3) & (r < 0.6))

    with pytest.raises(MixedLatticeError, match="star-shaped"):
        gauge_bisect(holed, [1.0, 0.0, 0.0])


def test_mf1_box_gauge_equals_box_gauge(grid3):
    """MF_1 of a box is the box itself, so both gauges coincide."""
    rng = law_rng(0, "mf1-gauge")
    U = BoxSet([-1.0, -0.5, -2.0], [0.5, 1.0, 1.5])
    Z = grid3.sample_element(rng, 300, 5.0)
    np.testing.assert_allclose(mf1_box_gauge(grid3, U, Z), box_gauge(U, Z), rtol=1e-8)
    value = mf1_box_gauge(grid3, U3, np.array([[0.0, 2.0, 2.0]]))[0]
    assert 0 < value < 2.0 ** 10 * 3
    assert value == pytest.approx(2.0, rel=1e-8)


def test_gauge_values_batched(grid3):
    Z = np.array([[2.0, 1.0, 0.0], [0.0, 0.0, 0.0], [-0.5, 0.25, 0.0]])
    vals, widths = gauge_values(U3.contains, Z)
    np.testing.assert_allclose(vals, [2.0, 0.0, 0.5], atol=1e-9)
    assert widths[1] == 0.0


def test_gauge_monotone_on_grid():
    for m in (2, 5):
        rep = check_gauge_monotone(GridSpace(m), samples=2000, seed=0)
        assert rep.passed


@pytest.mark.parametrize("name", ["quadrant", "grid3", "product4"])
def test_hull_properties(name, request):
    space = request.getfixturevalue(name)
    reports = check_hull_props(space, samples=2000, seed=0, tol=1e-9)
    assert [r.law for r in reports] == [
        "H-MF-CONJ", "H-MS-CONJ", "H-MS-SCALE", "H-MS-BALANCED", "H-MS-PMS",
        "H-MS-ZERO", "H-SH-CONTAINS", "H-SH-SOLID"]
    for r in reports:
        assert r.passed, (r.law, r.failures[:1])
    # the conjugacy probes are not vacuous
    assert int(reports[0].notes.split()[1].split("/")[0]) > 100


def test_hull_checks_catch_a_wrong_membership(quadrant, monkeypatch):
    import mixlat.hulls as hulls

    real = hulls.mf_member

    def lopsided(space, A, y, variant=1):
        out = real(space, A, y, variant)
        return out if variant == 1 else out & (np.asarray(y)[..., 0] > 0)

    monkeypatch.setattr(hulls, "mf_member", lopsided)
    reports = hulls.check_hull_props(quadrant, samples=2000, seed=0)
    assert not reports[0].passed


def test_absorbency_contrast(quadrant, grid3):
    found, total, generating = check_absorbency(grid3, 1000)
    assert (found, total, generating) == (1000, 1000, True)
    found, total, generating = check_absorbency(quadrant, 1000)
    assert (found, total, generating) == (0, 1000, False)
    # on the ray itself the search succeeds in the ray space too
    assert ms_absorb_search(quadrant, np.array([[2.0, 2.0], [-3.0, -3.0]])).all()
