import itertools

import numpy as np
import pytest

from mixlat.core import MixedLatticeError, sym_abs
from mixlat.grid import (GridSpace, audit_sup_norm_claims, bv_norm, env_down_grid,
                         env_up_grid, sleq_grid, split_specific, sup_norm)
from mixlat.laws import law_rng

from oracles import grid_competitors


def test_grid_needs_two_points():
    with pytest.raises(MixedLatticeError):
        GridSpace(0)


def test_sleq_grid(grid3):
    assert sleq_grid(grid3, [0, 1, 0], [1, 3, 2])
    assert not sleq_grid(grid3, [0, 1, 0], [1, 0, 2])
    assert not sleq_grid(grid3, [1, 1, 1], [0, 5, 5])


def test_norm_examples():
    f = np.array([1.0, -3.0, 2.0])
    assert sup_norm(f) == 3.0
    assert bv_norm(f) == 10.0
    assert bv_norm(np.zeros(4)) == 0.0


@pytest.mark.parametrize("m", [1, 2, 5, 20])
def test_envelopes_are_minimal_against_competitors(m):
    sp = GridSpace(m)
    rng = law_rng(m, "grid-minimality")
    for _ in range(100):
        f, g = sp.sample_element(rng, 2)
        up = env_up_grid(sp, f, g)
        assert sp.leq_specific(f, up) and sp.leq_initial(g, up)
        for w in grid_competitors(rng, f, g, 10):
            assert np.all(up <= w + 1e-12)
        # lower envelope through negation: maximal below
        lo = env_down_grid(sp, f, g)
        assert sp.leq_specific(lo, f) and sp.leq_initial(lo, g)
        for w in grid_competitors(rng, -f, -g, 10):
            assert np.all(lo >= -w - 1e-12)


def test_split_specific_reconstructs(grid3):
    f = np.array([1.0, -3.0, 2.0])
    a, b = split_specific(grid3, f)
    np.testing.assert_allclose(a - b, f)
    assert grid3.specific_gap(a) == 0.0 and grid3.specific_gap(b) == 0.0
    np.testing.assert_allclose(a, [1, 1, 6])
    np.testing.assert_allclose(b, [0, 4, 4])


# -- audit -----------------------------------------------------------------------

def _brute_s(g, bound):
    """``s(g) = (0∨g) + (0∨-g)`` with each envelope found by enumerating
    every integer majorant that is nonnegative and nondecreasing."""
    cands = [np.array(w, float) for w in
             itertools.combinations_with_replacement(range(2 * bound + 1), len(g))]

    def least(target):
        feasible = [w for w in cands if np.all(w >= target)]
        best = np.min(feasible, axis=0)
        assert any(np.array_equal(best, w) for w in feasible)
        return best

    return least(g) + least(-g)


def test_audit_matches_bruteforce_at_bound_3(grid3):
    bound = 3
    G = [np.array(v, float) for v in itertools.product(range(-bound, bound + 1), repeat=3)]
    S = [_brute_s(g, bound) for g in G]
    eq_bad = sum(s[-1] != sup_norm(g) for g, s in zip(G, S))
    ml_bad = sum(
        1 for i, j in itertools.product(range(len(G)), repeat=2)
        if np.all(S[i] <= S[j]) and sup_norm(G[i]) > sup_norm(G[j])
    )
    rep = audit_sup_norm_claims(grid3, bound)
    assert rep.functions == len(G)
    assert rep.claim_norm_eq["violations"] == eq_bad
    assert rep.claim_ml_norm["violations"] == ml_bad
    np.testing.assert_array_equal(sym_abs(grid3, np.array(G)), np.array(S))


def test_audit_bound_4_verdicts(grid3):
    rep = audit_sup_norm_claims(grid3, 4)
    assert rep.functions == 729 and rep.s_routes_agree
    eq = rep.claim_norm_eq
    assert not eq["holds"] and eq["violations"] == 480
    assert eq["counterexample"]["g"] == [-1.0, 0.0, 1.0]
    assert eq["counterexample"]["s_g"] == [1.0, 1.0, 2.0]
    ml = rep.claim_ml_norm
    assert not ml["holds"] and ml["violations"] == 12092
    assert ml["counterexample"]["f"] == [0.0, -2.0, 0.0]
    assert ml["counterexample"]["g"] == [-1.0, 1.0, 0.0]
    bv = rep.bv_under_s_order
    assert bv["violating_pairs"] == 14788
    assert bv["example"]["f"] == [-1.0, 0.0, -1.0] and bv["example"]["g"] == [-1.0, 0.0, 0.0]


def test_audit_witnesses_are_minimal(grid3):
    """No violating function or pair is smaller under (max sup, l1, lex)."""
    rep = audit_sup_norm_claims(grid3, 4)
    vals = range(-4, 5)
    G = np.array(list(itertools.product(vals, repeat=3)), float)
    S = sym_abs(grid3, G)
    sup, l1 = sup_norm(G), np.abs(G).sum(axis=1)
    bad = [(sup[k], l1[k], tuple(G[k])) for k in range(len(G)) if S[k, -1] != sup[k]]
    assert list(min(bad)[2]) == rep.claim_norm_eq["counterexample"]["g"]
    # pairs: restrict the scan to small sup norms, where the minimum must lie
    small = np.nonzero(sup <= 2)[0]
    pairs = [(max(sup[i], sup[j]), l1[i] + l1[j], tuple(G[i]), tuple(G[j]))
             for i in small for j in small
             if np.all(S[i] <= S[j]) and sup[i] > sup[j]]
    best = min(pairs)
    w = rep.claim_ml_norm["counterexample"]
    assert (list(best[2]), list(best[3])) == (w["f"], w["g"])


def test_audit_bound_zero_is_trivial(grid3):
    rep = audit_sup_norm_claims(grid3, 0)
    assert rep.functions == 1
    assert rep.claim_norm_eq["holds"] and rep.claim_ml_norm["holds"]
    assert rep.claim_norm_eq["counterexample"] is None


def test_audit_rejects_bad_config():
    with pytest.raises(MixedLatticeError):
        audit_sup_norm_claims(GridSpace(3), 2)
    with pytest.raises(MixedLatticeError):
        audit_sup_norm_claims(GridSpace(2), 7)
    with pytest.raises(MixedLatticeError):
        audit_sup_norm_claims(GridSpace(2), -1)


def test_audit_routes_disagreement_raises(grid3):
    class Skewed(GridSpace):
        def _env_up(self, u, v):
            out = super()._env_up(u, v)
            out[..., -1] += 0.5 * (np.abs(u - v).sum(axis=-1) > 0) * (u[..., 0] > v[..., 0])
            return out

    with pytest.raises(ArithmeticError, match="routes disagree"):
        audit_sup_norm_claims(Skewed(2), 2)
