#!/usr/bin/env python3
"""Time the hot kernels on both backends (numba @njit vs pure numpy).

Run:  python benchmarks/bench_backends.py [--repeat 3]

POWERSIEVE_BACKEND is re-read on every kernel call, so the flag is flipped
between rounds in-process.  Each workload gets one warm-up call per backend
so numba's JIT compilation is not timed.
"""

import argparse
import os
import time

from powersieve import expsums, oracles, twins
from powersieve.expsums import ExpSumParams


def workloads():
    params = ExpSumParams(9, 7, 13, 3, 5, 11, 1)
    return [
        ("twin sieve x=1e7 (s=2)", lambda: twins.count_twin_sfree(2, 10**7)),
        ("s_full upq=819", lambda: expsums.s_full(params)),
        ("s2 grid p=97 s=2", lambda: expsums.s2_bound_grid(97, 2, 1)),
        (
            "hensel scan k=32 s=5",
            lambda: oracles.hensel_scan_counts(5, 32, list(range(1, 40, 2))),
        ),
        ("decomposition prefix x=1e4", lambda: twins.decomposition_prefix(2, 10**4)),
    ]


def bench(fn, repeat: int) -> float:
    fn()  # warm-up: JIT compile, prime tables, root caches
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run(repeat: int) -> None:
    names = [name for name, _ in workloads()]
    results = {}
    for backend_name in ("numba", "numpy"):
        os.environ["POWERSIEVE_BACKEND"] = backend_name
        for name, fn in workloads():
            results[(name, backend_name)] = bench(fn, repeat)
    width = max(len(n) for n in names)
    print(f"{'kernel':<{width}}  {'numba':>10}  {'numpy':>10}  {'speedup':>8}")
    for name in names:
        nb = results[(name, "numba")]
        np_ = results[(name, "numpy")]
        print(f"{name:<{width}}  {nb:>9.4f}s  {np_:>9.4f}s  {np_ / nb:>7.1f}x")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    run(ap.parse_args().repeat)
