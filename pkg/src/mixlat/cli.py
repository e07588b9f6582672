"""Command-line entry point: ``mixlat {eval,verify,audit,plot}``.

Exit codes: 0 pass, 1 a law or axiom was violated, 2 usage or input error.
"""
import argparse
import json
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from mixlat import __version__, kernels
from mixlat.core import (MixedLatticeError, ProductRieszSpace, env_down, env_up,
                         gen_abs, parts)
from mixlat.grid import (MAX_AUDIT_BOUND, GridSpace, audit_sup_norm_claims,
                         bv_norm, sup_norm)
from mixlat.hulls import (BoxSet, FiniteSet, check_absorbency, check_hull_props,
                          mf_member, ms_member, sh_member)
from mixlat.io import dumps, load_set, load_space, write_json
from mixlat.laws import check_all_laws
from mixlat.norms import (check_asym_axioms, check_cone_norm, check_lipschitz,
                          check_norm0_axioms, check_seminorm_class, cone_norm_Q,
                          gauge_handle, make_handle, norm0, ql_ratio)
from mixlat.ray import RaySpace, interval_extent, t_min_shift
from mixlat.svg import render_svg

EXIT_PASS, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2
SUITES = ("core", "hulls", "norms", "all")
MAX_TOL = 1e-3


class UsageError(Exception):
    pass


# -- verification suite ----------------------------------------------------------

@dataclass
class SuiteReport:
    suite: str
    space: dict
    samples: int
    seed: int
    tol: float
    laws: list = field(default_factory=list)
    cone_norms: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    timestamp: str = ""

    @property
    def passed(self):
        return (all(r.passed for r in self.laws)
                and all(r.passed for r in self.cone_norms)
                and all(f.get("verdict") != "fail" for f in self.findings))

    def to_json(self, with_timestamp=True):
        env = {"version": __version__, "seed": self.seed, "backend": kernels.BACKEND,
               "numpy": np.__version__}
        if with_timestamp:
            env["timestamp"] = self.timestamp
        return {
            "suite": self.suite,
            "space": self.space,
            "config": {"samples": self.samples, "seed": self.seed, "tol": self.tol},
            "verdict": "pass" if self.passed else "fail",
            "laws": [r.to_json() for r in self.laws],
            "cone_norms": [r.to_json() for r in self.cone_norms],
            "findings": self.findings,
            "environment": env,
        }


def _absorbency_entry(space, samples, seed):
    found, total, generating = check_absorbency(space, min(samples, 1000), seed)
    expected = total if generating else 0
    return {"check": "ms-absorbency-search", "found": found, "total": total,
            "specific_cone_generates_probes": generating,
            "consistent": found == expected}


def run_suite(space, suite="all", samples=10_000, seed=0, tol=1e-9, base_set=None):
    """Run one verification suite and collect a ``SuiteReport``."""
    if suite not in SUITES:
        raise MixedLatticeError(f"unknown suite {suite!r}")
    rep = SuiteReport(suite, space.to_json(), int(samples), int(seed), float(tol),
                      timestamp=time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()))
    if suite in ("core", "all"):
        rep.laws += check_all_laws(space, samples, seed, tol)
    if suite in ("hulls", "all"):
        rep.laws += check_hull_props(space, samples, seed, tol)
        entry = _absorbency_entry(space, samples, seed)
        entry["verdict"] = "pass" if entry["consistent"] else "fail"
        rep.findings.append(entry)
    if suite in ("norms", "all"):
        _norm_checks(rep, space, samples, seed, tol, base_set)
    return rep


def _box_for(space, base_set):
    if isinstance(base_set, BoxSet):
        return base_set
    return BoxSet.symmetric(space.dim)


def _norm_checks(rep, space, samples, seed, tol, base_set):
    if isinstance(space, RaySpace):
        rho = make_handle(space, "norm0")
        for variant in ("l", "r"):
            rep.cone_norms.append(check_cone_norm(space, variant, samples, seed, tol))
        rep.laws.append(check_norm0_axioms(space, samples, seed, tol))
        rep.laws.append(check_seminorm_class(space, rho, "mixed_lattice", samples, seed, tol))
        rep.laws.append(check_asym_axioms(space, rho, samples, seed, tol))
        rep.laws.append(check_lipschitz(space, samples, seed))
        rep.findings.append({"check": "ql-lipschitz-ratio", "asserted": False,
                             "max_ratio": ql_ratio(space, samples, seed)})
    elif isinstance(space, GridSpace):
        rep.laws.append(check_seminorm_class(space, make_handle(space, "bv"),
                                             "mixed_monotone", samples, seed, tol))
        rep.laws.append(check_seminorm_class(space, make_handle(space, "q:bv"),
                                             "mixed_lattice", samples, seed, tol))
        gauge = gauge_handle(space, _box_for(space, base_set), "gauge:box")
        rep.laws.append(check_seminorm_class(space, gauge, "mixed_monotone",
                                             samples, seed, max(tol, 1e-8)))
        sup = check_seminorm_class(space, make_handle(space, "sup"), "mixed_lattice",
                                   samples, seed, tol)
        rep.findings.append({"check": "sup-norm-mixed-lattice", "asserted": False,
                             "sampled_passed": sup.passed,
                             "failure_count": sup.failure_count,
                             "report": sup.to_json(),
                             "note": "decided exhaustively by the audit command"})
    elif isinstance(space, ProductRieszSpace):
        for name in ("sup", "q:sup"):
            rep.laws.append(check_seminorm_class(space, make_handle(space, name),
                                                 "mixed_lattice", samples, seed, tol))


def _suite_exit(rep):
    return EXIT_PASS if rep.passed else EXIT_VIOLATION


# -- eval ------------------------------------------------------------------------

def _vector(text, space):
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"argument {text!r} is not JSON ({exc.msg})") from None
    return space.element(value)


def _need(args, count, op):
    if len(args) != count:
        raise UsageError(f"{op} takes {count} vector argument(s), got {len(args)}")


def _need_set(base, kinds, op):
    if not isinstance(base, kinds):
        raise UsageError(f"{op} needs --set of type {' or '.join(k.__name__ for k in kinds)}")


def evaluate(space, op, vectors, base_set=None, variant=None, handle=None):
    """Evaluate one named operation; returns a JSON-ready output value."""
    vs = [space.element(v) for v in vectors]
    if op in ("env_up", "env_down"):
        _need(vs, 2, op)
        return (env_up if op == "env_up" else env_down)(space, *vs)
    if op in ("parts", "gen_abs"):
        _need(vs, 1, op)
        return (parts if op == "parts" else gen_abs)(space, vs[0]).to_json()
    if op in ("leq_initial", "leq_specific"):
        _need(vs, 2, op)
        return bool(getattr(space, op)(vs[0], vs[1]))
    if op in ("sup_norm", "bv_norm"):
        _need(vs, 1, op)
        return float((sup_norm if op == "sup_norm" else bv_norm)(vs[0]))
    if op in ("t_min_shift", "interval_extent", "norm0"):
        if not isinstance(space, RaySpace):
            raise UsageError(f"{op} needs a ray_cone space")
        if op == "interval_extent":
            _need(vs, 2, op)
            return interval_extent(space, *vs).to_json()
        _need(vs, 1, op)
        return float((t_min_shift if op == "t_min_shift" else norm0)(space, vs[0]))
    if op == "conenorm":
        _need(vs, 1, op)
        return cone_norm_Q(space, vs[0], variant or "l")
    if op in ("mf_member", "ms_member", "sh_member"):
        _need(vs, 1, op)
        _need_set(base_set, (FiniteSet,), op)
        if op == "sh_member":
            return bool(sh_member(space, base_set, vs[0]))
        fn = mf_member if op == "mf_member" else ms_member
        return bool(fn(space, base_set, vs[0], int(variant or 1)))
    if op == "gauge":
        _need(vs, 1, op)
        _need_set(base_set, (FiniteSet, BoxSet), op)
        return float(gauge_handle(space, base_set)(vs[0]))
    if op == "norm":
        _need(vs, 1, op)
        if not handle:
            raise UsageError("norm needs --handle")
        return float(make_handle(space, handle, {"set": base_set} if base_set else None)(vs[0]))
    raise UsageError(f"unknown op {op!r}")


EVAL_OPS = ("env_up", "env_down", "parts", "gen_abs", "leq_initial", "leq_specific",
            "sup_norm", "bv_norm", "t_min_shift", "interval_extent", "norm0",
            "conenorm", "mf_member", "ms_member", "sh_member", "gauge", "norm")


def cmd_eval(args):
    space = load_space(args.space)
    base = load_set(args.set, space) if args.set else None
    vectors = [_vector(t, space) for t in args.vectors]
    out = evaluate(space, args.op, vectors, base, args.variant, args.handle)
    payload = {"op": args.op, "inputs": [v.tolist() for v in vectors], "output": out}
    if args.variant:
        payload["variant"] = args.variant
    if args.handle:
        payload["handle"] = args.handle
    _emit(dumps(payload), args.out)
    return EXIT_PASS


def cmd_verify(args):
    space = load_space(args.space)
    base = load_set(args.set, space) if args.set else None
    rep = run_suite(space, args.suite, args.samples, args.seed, args.tol, base)
    body = dumps(rep)
    _emit(body, args.out)
    if args.out:
        verdict = "pass" if _suite_exit(rep) == EXIT_PASS else "fail"
        print(f"{args.suite}: {verdict} ({len(rep.laws)} law reports, "
              f"{len(rep.cone_norms)} cone-norm reports)")
    return _suite_exit(rep)


def cmd_audit(args):
    space = load_space(args.space)
    if not isinstance(space, GridSpace) or space.m != 2:
        raise UsageError("audit needs a bv_grid space with m = 2")
    if not 0 <= args.bound <= MAX_AUDIT_BOUND:
        raise UsageError(f"--bound must lie in [0, {MAX_AUDIT_BOUND}]")
    start = time.perf_counter()
    report = audit_sup_norm_claims(space, args.bound).to_json()
    report["seconds"] = round(time.perf_counter() - start, 3)
    _emit(dumps(report), args.out)
    if args.out:
        for key in ("claim_norm_eq", "claim_ml_norm"):
            print(f"{key}: {'holds' if report[key]['holds'] else 'fails'}")
    return EXIT_PASS


def cmd_plot(args):
    space = load_space(args.space)
    if not isinstance(space, RaySpace) or space.dim != 2:
        raise UsageError("plot needs a ray_cone space with n = 2")
    pts = [_vector(t, space) for t in args.vectors]
    if args.set:
        base = load_set(args.set, space)
        _need_set(base, (FiniteSet,), "plot")
        pts += list(base.points)
    _emit(render_svg(space, np.array(pts).reshape(-1, 2)), args.out)
    return EXIT_PASS


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- argument parsing --------------------------------------------------------------

def _tol(text):
    value = float(text)
    if not 0.0 <= value <= MAX_TOL:
        raise argparse.ArgumentTypeError(f"tol must lie in [0, {MAX_TOL}]")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _seed(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be nonnegative")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", required=True, help="space description (JSON file)")
    common.add_argument("--set", help="base set (JSON file: points or box)")
    common.add_argument("--out", help="output file (default: standard output)")

    parser = argparse.ArgumentParser(prog="mixlat", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"mixlat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate one operation")
    p.add_argument("op", choices=EVAL_OPS)
    p.add_argument("vectors", nargs="*", help="JSON vectors, e.g. '[1,-2]'")
    p.add_argument("--variant", help="l|r for conenorm, 1|2 for hull membership")
    p.add_argument("--handle", help="functional name for 'norm', e.g. q:bv")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--samples", type=_positive, default=10_000)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--tol", type=_tol, default=1e-9)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit", parents=[common], help="exhaustive sup-norm audit (m = 2)")
    p.add_argument("--bound", type=int, default=4, help="integer value bound")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("plot", parents=[common], help="SVG of a planar ray-cone space")
    p.add_argument("vectors", nargs="*", help="JSON points to plot")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None):
    parser = build_parser()
    # vectors may follow options; argparse leaves those as extras
    args, extra = parser.parse_known_args(argv)
    if extra:
        if args.command not in ("eval", "plot") or any(e.startswith("--") for e in extra):
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
        args.vectors = list(args.vectors) + extra
    try:
        return args.func(args)
    except (UsageError, MixedLatticeError, OSError) as exc:
        sys.stdout.write(json.dumps({"error": str(exc), "command": args.command}) + "\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
