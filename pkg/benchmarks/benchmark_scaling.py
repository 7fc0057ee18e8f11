#!/usr/bin/env python3
"""Scaling benchmark: naive scorer at q=5000 vs fast scorer at q=50000.

The naive path does Theta(q^2 n) similarity work, so its q=50000 cost is
estimated by scaling the measured q=5000 time by (50000/5000)^2 = 100.
Run from the repository root:

    python benchmarks/benchmark_scaling.py
"""

import time

import numpy as np

from odac import Dataset, Params, score_all_fast, score_all_naive

Q_NAIVE = 5_000
Q_FAST = 50_000
DIM = 6
PARAMS = Params(n_d=200.0, s_n=15)


def timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


def main() -> None:
    rng = np.random.default_rng(0)
    small = Dataset(rng.uniform(0.0, 300.0, (Q_NAIVE, DIM)))
    big = Dataset(rng.uniform(0.0, 300.0, (Q_FAST, DIM)))

    _, t_naive_small = timed(score_all_naive, small, PARAMS)
    naive_big_est = t_naive_small * (Q_FAST / Q_NAIVE) ** 2

    _, t_fast_small = timed(score_all_fast, small, PARAMS)
    _, t_fast_big = timed(score_all_fast, big, PARAMS)

    speedup = naive_big_est / t_fast_big
    print(f"naive  q={Q_NAIVE:>6d} n={DIM}: {t_naive_small:8.2f} s (measured)")
    print(f"naive  q={Q_FAST:>6d} n={DIM}: {naive_big_est:8.2f} s (quadratic estimate)")
    print(f"fast   q={Q_NAIVE:>6d} n={DIM}: {t_fast_small:8.3f} s (measured)")
    print(f"fast   q={Q_FAST:>6d} n={DIM}: {t_fast_big:8.3f} s (measured)")
    print(f"fast-vs-naive speedup at q={Q_FAST}: {speedup:.0f}x (target >= 10x)")


if __name__ == "__main__":
    main()
