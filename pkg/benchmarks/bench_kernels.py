#!/usr/bin/env python3
"""Benchmark the compiled scan kernels against the pure-Python fallback.

Run after installing the package:

    python3 benchmarks/bench_kernels.py [--repeats 5] [--scale 1.0]

Sequentially dependent scans (minimal sort recurrence, dealer greedy
scan, readings replay) are where the compiled kernels pay off; the batch
statistics mostly show NumPy holding its own.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from pileshuffle import _kernels_py

try:
    from pileshuffle import _kernels_c
except ImportError:
    _kernels_c = None


def best_of(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def build_cases(scale: float):
    rng = np.random.default_rng(2024)
    n = int(200_000 * scale)
    pos = rng.permutation(n).astype(np.int64) + 1
    chi_sched = rng.integers(0, 2, size=n).astype(np.uint8)
    # a valid sorting assignment, so check_scan runs the whole scan
    piles, _ = _kernels_py.minimal_scan(pos, chi_sched)
    chi_label = chi_sched[piles - 1]
    deck = rng.permutation(int(2_000 * scale)).astype(np.int64) + 1
    batch = rng.permuted(
        np.tile(np.arange(1, 101, dtype=np.int64), (int(20_000 * scale), 1)), axis=1)
    return [
        (f"check_scan (n={n})",
         lambda k: k.check_scan(piles, pos, chi_label)),
        (f"minimal_scan (n={n}, mixed types)",
         lambda k: k.minimal_scan(pos, chi_sched)),
        (f"dealer_scan (n={n})",
         lambda k: k.dealer_scan(pos)),
        (f"readings_scan (n={len(deck)})",
         lambda k: k.readings_scan(deck)),
        (f"batch_descents ({batch.shape[0]}x{batch.shape[1]})",
         lambda k: k.batch_descents(batch)),
        (f"batch_dealer_piles ({batch.shape[0]}x{batch.shape[1]})",
         lambda k: k.batch_dealer_piles(batch)),
    ]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--scale", type=float, default=1.0,
                        help="shrink or grow every input size")
    args = parser.parse_args()

    if _kernels_c is None:
        print("compiled kernels not available; benchmarking the fallback only")
    header = f"{'kernel':44s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name, call in build_cases(args.scale):
        t_py = best_of(lambda: call(_kernels_py), args.repeats)
        if _kernels_c is not None:
            t_c = best_of(lambda: call(_kernels_c), args.repeats)
            print(f"{name:44s} {t_py * 1e3:9.2f}ms {t_c * 1e3:9.2f}ms "
                  f"{t_py / t_c:7.1f}x")
        else:
            print(f"{name:44s} {t_py * 1e3:9.2f}ms {'-':>10s} {'-':>8s}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
