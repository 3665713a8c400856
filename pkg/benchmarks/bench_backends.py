#!/usr/bin/env python3
"""Benchmark the compiled kernels against the Python fallback.

Checks that both lanes return identical arrays, then times each kernel on
workloads shaped like the real experiments (trace tables near p = 10^4,
Farey histograms near T = 4 * 10^3).

Usage:
    python benchmarks/bench_backends.py [--quick] [--repeats N]
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

try:
    from farey_lt._kernels import native, pyloops
except ImportError:
    sys.exit("farey_lt is not importable; run 'pip install -e .' first")


def best_of(repeats, fn, *args):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(quick: bool):
    p_hist, t_hist = (101, 1000) if quick else (101, 4000)
    p_trace = 2003 if quick else 10007
    w_cong, p_cong = (20011, 2003) if quick else (109675, 9973)
    a4s = [(7 * v + 1) % p_trace for v in range(p_trace)]
    a6s = [(v * v + 3) % p_trace for v in range(p_trace)]
    return [
        ("chi_table(p=100003)", "chi_table", (100003,)),
        (f"trace_batch(p={p_trace}, {p_trace} curves)", "trace_batch", (p_trace, a4s, a6s)),
        (f"coprime_histogram(T={t_hist}, p={p_hist})", "coprime_histogram", (t_hist, p_hist, 1, t_hist + 1)),
        (f"congruence_pair_counts(w={w_cong}, p={p_cong})", "congruence_pair_counts", (w_cong, p_cong)),
    ]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    parser.add_argument("--repeats", type=int, default=3, help="best-of-N timing")
    args = parser.parse_args()

    if native is None:
        sys.exit(
            "compiled kernels are not built (python lane only); "
            "run 'pip install -e .' and retry"
        )

    print(f"{'kernel':<44} {'python':>10} {'native':>10} {'speedup':>9}")
    for label, name, call_args in workloads(args.quick):
        py_fn = getattr(pyloops, name)
        nat_fn = getattr(native, name)
        if not np.array_equal(py_fn(*call_args), nat_fn(*call_args)):
            sys.exit(f"lane mismatch in {label}")
        py_t = best_of(args.repeats, py_fn, *call_args)
        nat_t = best_of(args.repeats, nat_fn, *call_args)
        print(f"{label:<44} {py_t:>9.4f}s {nat_t:>9.4f}s {py_t / nat_t:>8.1f}x")


if __name__ == "__main__":
    main()
