"""Compare the compiled and pure-Python search kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both kernels run the same search, so node counts must agree; the script
checks that before reporting timings.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from dtsldpc import kernels
from dtsldpc.analysis import free_distance
from dtsldpc.construction import CodeDescriptor, build_base, sliding
from dtsldpc.dts import DifferenceTriangleSet
from dtsldpc.field import FieldMatrix, make_field


def random_matrix(rows, cols, density, seed):
    F = make_field(2, 8)
    rng = np.random.default_rng(seed)
    vals = rng.integers(1, F.q, size=(rows, cols)) * (rng.random((rows, cols)) < density)
    return FieldMatrix(F, vals)


def workloads():
    ex = build_base(CodeDescriptor(3, 2, make_field(13), DifferenceTriangleSet(((1, 2, 6), (1, 2, 4))), "alpha"))
    H12, H16 = random_matrix(12, 30, 0.3, 0), random_matrix(16, 40, 0.25, 0)
    P4 = sliding(ex, ex.mu + 4).matrix.pattern()
    P8 = sliding(ex, ex.mu + 8).matrix.pattern()
    return [
        ("circuit search 12x30 GF(256), d<=5", lambda ext: kernels.circuit_search(H12, 4, 5, 10**9, ext)[1]),
        ("circuit search 16x40 GF(256), d<=6", lambda ext: kernels.circuit_search(H16, 4, 6, 10**9, ext)[1]),
        ("cycle search 10x30 window, l<=7", lambda ext: len(kernels.cycle_search(P4, 7, 10**9, ext)[0])),
        ("cycle search 14x42 window, l<=7", lambda ext: len(kernels.cycle_search(P8, 7, 10**9, ext)[0])),
        ("free distance, (3,2) code end to end", lambda ext: free_distance(ex, use_extension=ext).value),
    ]


def best_of(fn, repeat):
    times, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernels.HAVE_EXTENSION:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    print(f"{'workload':40s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}")
    for name, fn in workloads():
        py, r_py = best_of(lambda: fn(False), args.repeat)
        cy, r_cy = best_of(lambda: fn(True), args.repeat)
        if r_py != r_cy:
            raise SystemExit(f"{name}: kernels disagree ({r_py} vs {r_cy})")
        print(f"{name:40s} {py:11.4f} {cy:11.4f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
