"""Timing comparison of the compiled and pure-numpy kernel backends.

Run as: python3 benchmarks/bench_backends.py [--repeat N]

The first call on the compiled path pays JIT compilation cost, so every
(kernel, backend) pair gets one untimed warmup call before measurement.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from mvpolytopes._kernels import get_backend
from mvpolytopes.cartan import build_cartan
from mvpolytopes.weyl import weyl_group


def combination_workload():
    group = weyl_group(build_cartan("A", 3))
    parts = group._parts_matrix()
    target = np.array([4, 4, 4], dtype=np.int64)
    return parts, target


def box_workload(rng):
    bounds = np.array([5, 5, 5, 5, 5, 4], dtype=np.int64)
    ineqs = rng.integers(-2, 3, size=(40, 6)).astype(np.int64)
    return bounds, ineqs


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    parts, target = combination_workload()
    bounds, ineqs = box_workload(rng)

    rows = []
    reference = {}
    for backend in ("numba", "numpy"):
        try:
            impl = get_backend(backend)
        except RuntimeError as e:
            print(f"{backend}: unavailable ({e})")
            continue
        cases = [
            (
                "enumerate_combinations",
                lambda: impl["enumerate_nonneg_combinations"](parts, target),
            ),
            ("count_combinations", lambda: impl["count_nonneg_combinations"](parts, target)),
            ("filter_box_points", lambda: impl["filter_box_points"](bounds, ineqs)),
        ]
        for name, fn in cases:
            fn()  # warmup, JIT-compiles on the numba path
            best, out = timeit(fn, args.repeat)
            key = np.asarray(out).tobytes() if not np.isscalar(out) else out
            if name in reference:
                assert reference[name] == key, f"backends disagree on {name}"
            else:
                reference[name] = key
            rows.append((name, backend, best))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'backend':<7}  best of {args.repeat} (ms)")
    for name, backend, best in rows:
        print(f"{name:<{width}}  {backend:<7}  {best * 1e3:10.3f}")

    by_kernel = {}
    for name, backend, best in rows:
        by_kernel.setdefault(name, {})[backend] = best
    for name, times in by_kernel.items():
        if len(times) == 2:
            print(f"{name}: numba is {times['numpy'] / times['numba']:.1f}x faster")


if __name__ == "__main__":
    main()
