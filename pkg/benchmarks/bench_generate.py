#!/usr/bin/env python3
"""Compare the compiled generation kernel against the pure-Python fallback.

Usage: python3 benchmarks/bench_generate.py [--terms N] [--repeats R]
"""

import argparse
import time

from hiccup.engine import SequenceParams, generate, kernel_loaded, _generate_py

CASES = [
    ("ramsey-like", SequenceParams(3, 1, 2)),
    ("beatty A Z=4", SequenceParams(2, 5, 4)),
    ("y=0 periodic", SequenceParams(7, 0, 4)),
    ("lagged", SequenceParams(1, 2, 1, j=1)),
]


def _time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--terms", type=int, default=1_000_000)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    print(f"kernel loaded: {kernel_loaded()}   terms: {args.terms:,}")
    print(f"{'case':<14} {'kernel':>10} {'pure':>10} {'speedup':>8}")
    for name, params in CASES:
        t_kernel = _time(lambda: generate(params, args.terms), args.repeats)
        t_pure = _time(
            lambda: _generate_py(params.j, params.x, params.y, params.z, args.terms),
            args.repeats,
        )
        print(f"{name:<14} {t_kernel:>9.3f}s {t_pure:>9.3f}s {t_pure / t_kernel:>7.1f}x")


if __name__ == "__main__":
    main()
