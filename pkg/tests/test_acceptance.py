"""Acceptance gate: one test per criterion, one PASS/FAIL line per criterion.

Run with pytest (lines appear in the terminal summary) or standalone::

    python3 tests/test_acceptance.py
"""
import json
import os
import sys
import tempfile
import time

import numpy as np

sys.path.insert(0, os.path.dirname(__file__))

from mixlat.cli import main as cli_main  # noqa: E402
from mixlat.core import ProductRieszSpace, env_down, env_up  # noqa: E402
from mixlat.grid import GridSpace, audit_sup_norm_claims  # noqa: E402
from mixlat.hulls import BoxSet, check_absorbency, check_hull_props  # noqa: E402
from mixlat.laws import LAW_IDS, check_all_laws, law_rng  # noqa: E402
from mixlat.norms import (check_cone_norm, check_lipschitz,  # noqa: E402
                          check_seminorm_class, gauge_handle, make_handle)
from mixlat.ray import RaySpace, bisect_t_min, t_min_shift  # noqa: E402

from conftest import random_ray_spaces  # noqa: E402

RESULTS = []
GRID_MS = (1, 2, 5, 20)
QUADRANT = RaySpace(np.eye(2), [1.0, 1.0])


def record(number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    RESULTS.append(line)
    if __name__ == "__main__":
        print(line, flush=True)
    return ok


def law_fixtures():
    return ([*random_ray_spaces()] + [GridSpace(m) for m in GRID_MS]
            + [ProductRieszSpace(4)])


def ray_fixtures():
    return [QUADRANT, *random_ray_spaces()]


def test_criterion_1_law_suite():
    start = time.perf_counter()
    failed, worst, runs = [], 0.0, 0
    for sp in law_fixtures():
        for rep in check_all_laws(sp, samples=10_000, seed=0, tol=1e-7):
            runs += 1
            worst = max(worst, rep.max_violation)
            if not rep.passed:
                failed.append(f"{sp!r}:{rep.law}")
    elapsed = time.perf_counter() - start
    ok = not failed and elapsed < 120.0 and runs == 10 * len(LAW_IDS)
    detail = (f"{runs} law runs on 10 spaces, 1e4 samples, tol 1e-7; "
              f"max violation {worst:.2e}; {elapsed:.1f} s; failures {failed[:5]}")
    assert record(1, ok, detail), detail


def _grid_competitor_check(sp, rng, count):
    """Each envelope against one random feasible competitor per sample."""
    n = count
    f, g = sp.sample_element(rng, n), sp.sample_element(rng, n)
    base = np.maximum.accumulate(np.maximum(g - f, 0.0), axis=1)
    free = np.maximum.accumulate(rng.uniform(0, 3, size=f.shape) * (rng.random(f.shape) < 0.5), axis=1)
    bump = np.cumsum(rng.uniform(0, 1, size=f.shape) * (rng.random(f.shape) < 0.3), axis=1)
    w = f + np.maximum(base, free) + bump
    up = env_up(sp, f, g)
    feasible = np.all(sp.leq_specific(f, up)) and np.all(sp.leq_initial(g, up))
    beaten = int(np.sum(np.any(up > w + 1e-12, axis=1)))
    # lower envelope: maximal among w' ≼ f, w' ≤ g, i.e. -w' competes for (-f, -g)
    base = np.maximum.accumulate(np.maximum(f - g, 0.0), axis=1)
    w_lo = f - (np.maximum(base, free) + bump)
    lo = env_down(sp, f, g)
    beaten += int(np.sum(np.any(lo < w_lo - 1e-12, axis=1)))
    return feasible, beaten


def test_criterion_2_oracle_agreement():
    worst_rel, exceptions = 0.0, 0
    for sp in ray_fixtures():
        y = sp.sample_element(law_rng(0, "acceptance-tmin"), 1000)
        closed, bis = t_min_shift(sp, y), bisect_t_min(sp, y)
        rel = np.abs(closed - bis) / np.maximum(np.abs(bis), 1.0)
        worst_rel = max(worst_rel, float(rel.max()))
    for m in GRID_MS:
        feasible, beaten = _grid_competitor_check(GridSpace(m), law_rng(m, "acceptance-min"), 1000)
        exceptions += beaten + (0 if feasible else 1)
    ok = worst_rel <= 1e-9 and exceptions == 0
    detail = (f"t_min closed form vs 80-step bisection max rel diff {worst_rel:.1e} "
              f"over {len(ray_fixtures())} ray spaces; grid minimality exceptions {exceptions}")
    assert record(2, ok, detail), detail


def test_criterion_3_degenerate_riesz():
    sp = ProductRieszSpace(4)
    rng = law_rng(0, "acceptance-riesz")
    u, v = sp.sample_element(rng, 10_000), sp.sample_element(rng, 10_000)
    ok = (np.array_equal(env_up(sp, u, v), np.maximum(u, v))
          and np.array_equal(env_down(sp, u, v), np.minimum(u, v)))
    detail = "product space: env_up == max and env_down == min bitwise on 1e4 samples"
    assert record(3, ok, detail), detail


def test_criterion_4_cone_norm():
    bad = []
    for sp in ray_fixtures():
        for variant in ("l", "r"):
            rep = check_cone_norm(sp, variant, samples=10_000, seed=0, tol=1e-8)
            checked = [k for k, v in rep.axioms.items() if v is not None]
            if variant == "r" and "monotone_specific" not in checked:
                bad.append(f"{sp!r}:r missing monotonicity")
            if not rep.passed:
                bad.append(f"{sp!r}:{variant}")
    detail = f"Q_l and Q_r axioms, properness, Q_r monotonicity on {len(ray_fixtures())} ray spaces; failures {bad}"
    assert record(4, not bad, detail), detail


def test_criterion_5_lipschitz():
    bad, ratio = [], 0.0
    for sp in ray_fixtures():
        rep = check_lipschitz(sp, samples=10_000, seed=0, slack=1e-8)
        ratio = max(ratio, float(rep.notes.split()[-1]))
        if not rep.passed:
            bad.append(f"{sp!r}: {rep.failure_count}")
    detail = f"norm0(xᵘ-yᵘ) ≤ norm0(x-y)+1e-8 on 1e4 pairs per ray space; max ratio {ratio:.6f}; exceptions {bad}"
    assert record(5, not bad, detail), detail


def test_criterion_6_hulls():
    spaces = [QUADRANT, *random_ray_spaces(), GridSpace(2), GridSpace(5), ProductRieszSpace(4)]
    bad = []
    for sp in spaces:
        for rep in check_hull_props(sp, samples=10_000, seed=0, tol=1e-9):
            if not rep.passed:
                bad.append(f"{sp!r}:{rep.law}")
    grid_found = [check_absorbency(GridSpace(m), 1000, 0)[:2] for m in GRID_MS]
    planar = [sp for sp in [QUADRANT, *random_ray_spaces()] if sp.dim == 2]
    ray_found = [check_absorbency(sp, 1000, 0) for sp in planar]
    absorb_ok = (all(f == t == 1000 for f, t in grid_found)
                 and all(f == 0 and not gen for f, _, gen in ray_found))
    ok = not bad and absorb_ok
    detail = (f"hull properties on {len(spaces)} spaces, 1e4 probes each, failures {bad}; "
              f"absorbency grid {grid_found}, planar ray {[(f, t) for f, t, _ in ray_found]}")
    assert record(6, ok, detail), detail


def test_criterion_7_seminorm_classes():
    grid3 = GridSpace(2)
    runs = [
        ("norm0 mixed_lattice", QUADRANT, make_handle(QUADRANT, "norm0"), "mixed_lattice"),
        ("bv mixed_monotone", grid3, make_handle(grid3, "bv"), "mixed_monotone"),
        ("q:bv mixed_lattice", grid3, make_handle(grid3, "q:bv"), "mixed_lattice"),
        ("gauge MF1(box) mixed_monotone", grid3,
         gauge_handle(grid3, BoxSet.symmetric(3), "gauge:box"), "mixed_monotone"),
    ]
    verdicts = {}
    for name, sp, handle, cls in runs:
        verdicts[name] = check_seminorm_class(sp, handle, cls, 10_000, 0, 1e-8).passed
    detail = "; ".join(f"{k}: {'pass' if v else 'fail'}" for k, v in verdicts.items())
    assert record(7, all(verdicts.values()), detail), detail


def test_criterion_8_audit():
    start = time.perf_counter()
    rep = audit_sup_norm_claims(GridSpace(2), 4)
    elapsed = time.perf_counter() - start
    witnesses_ok = all(c["holds"] or c["counterexample"] is not None
                       for c in (rep.claim_norm_eq, rep.claim_ml_norm))
    ok = elapsed < 60.0 and rep.s_routes_agree and witnesses_ok and rep.functions == 9 ** 3
    detail = (f"exhaustive m=2, |values| ≤ 4: {rep.functions} functions in {elapsed:.2f} s; "
              f"s-routes agree {rep.s_routes_agree}; "
              f"s(g)(b)=sup: {'holds' if rep.claim_norm_eq['holds'] else 'fails'} "
              f"(witness g={(rep.claim_norm_eq['counterexample'] or {}).get('g')}); "
              f"sup mixed lattice: {'holds' if rep.claim_ml_norm['holds'] else 'fails'} "
              f"(witness f={(rep.claim_ml_norm['counterexample'] or {}).get('f')}, "
              f"g={(rep.claim_ml_norm['counterexample'] or {}).get('g')})")
    assert record(8, ok, detail), detail


def test_criterion_9_determinism():
    with tempfile.TemporaryDirectory() as tmp:
        bodies = {}
        for name, spec in (("quadrant", {"type": "ray_cone", "A": [[1, 0], [0, 1]], "x_hat": [1, 1]}),
                           ("grid3", {"type": "bv_grid", "m": 2})):
            path = os.path.join(tmp, f"{name}.json")
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(spec, fh)
            runs = []
            for k in range(2):
                out = os.path.join(tmp, f"{name}-{k}.json")
                code = cli_main(["verify", "--space", path, "--suite", "all",
                                 "--samples", "10000", "--seed", "0", "--out", out])
                with open(out, encoding="utf-8") as fh:
                    body = json.load(fh)
                body["environment"].pop("timestamp")
                runs.append((code, json.dumps(body, sort_keys=True)))
            bodies[name] = runs
    ok = all(r[0] == r[1] and r[0][0] == 0 for r in bodies.values())
    detail = "verify --suite all twice on the quadrant and 3-point grid: identical reports excluding timestamp, exit 0"
    assert record(9, ok, detail), detail


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for fn in tests:
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
