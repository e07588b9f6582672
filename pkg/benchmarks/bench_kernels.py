"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--rows 100000] [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from mixlat import kernels
from mixlat.laws import law_rng
from mixlat.ray import random_ray_space


def cases(rows):
    rng = law_rng(0, "bench")
    sp = random_ray_space(rng, 5, 8)
    D = rng.uniform(-10, 10, size=(rows, 5))
    F, G = rng.uniform(-10, 10, size=(2, rows, 21))
    Z = rng.uniform(-2, 2, size=(rows, 21))
    lo, hi, bound = -np.ones(21), np.ones(21), np.full(rows, 1e-9)
    S = rng.integers(0, 5, size=(729, 3)).astype(float)
    left = rng.integers(0, 5, size=729).astype(float)
    return {
        "ray_shift (n=5, k=8)": lambda k: k.ray_shift(sp.A, sp.denom, D),
        "ray_extent (n=5, k=8)": lambda k: k.ray_extent(sp.A, sp.denom, D),
        "grid_envelope (m=20)": lambda k: k.grid_envelope(F, G),
        "box_mf1_member (m=20)": lambda k: k.box_mf1_member(Z, lo, hi, bound),
        "dominated_pairs (729 rows)": lambda k: k.dominated_pairs(S, left, left),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rows", type=int, default=100_000)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    names = sorted(kernels.BACKENDS)
    print(f"rows={args.rows}  best of {args.repeat}  backends: {', '.join(names)}")
    print(f"{'kernel':28s}" + "".join(f"{n:>12s}" for n in names) + f"{'speedup':>10s}")
    for label, fn in cases(args.rows).items():
        times = {}
        for name in names:
            mod = kernels.backend(name)
            times[name] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        row = f"{label:28s}" + "".join(f"{times[n] * 1e3:10.2f}ms" for n in names)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
