"""Benchmark the lattice-point kernel: compiled extension vs pure Python.

The kernel counts lattice points of {(u, v) : 0 <= v <= a, 0 <= u <= b - e*v}
one point at a time; it is the only hot loop in the package (the h^0 oracle
walks up to ~1e8 points at the enumeration bound).  This script times both
backends on growing inputs and prints the speedup.

Usage:
    python benchmarks/bench_kernels.py            # standard sizes
    python benchmarks/bench_kernels.py --quick    # tiny sizes (smoke test)
    python benchmarks/bench_kernels.py --full     # pure Python on all sizes
"""

import argparse
import sys
import time

from hirzcoh import _kernels_py

try:
    from hirzcoh import _kernels as _compiled
except ImportError:
    _compiled = None

# pure Python walks ~30M points/s; skip it past this many points by default
PURE_POINT_LIMIT = 30_000_000


def polygon_points(a, b, e):
    return sum(max(b - e * v + 1, 0) for v in range(max(a + 1, 0)))


def best_of(fn, args, repeats=3):
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return value, best


def run(sizes, full):
    print(f"{'a=b':>7} {'e':>2} {'points':>12} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for n, e in sizes:
        args = (n, n, e)
        points = polygon_points(*args)
        pure_time = None
        pure_count = None
        if full or points <= PURE_POINT_LIMIT:
            pure_count, pure_time = best_of(_kernels_py.lattice_point_count, args)
            assert pure_count == points
        row = f"{n:>7} {e:>2} {points:>12}"
        row += f" {pure_time:>10.4f}" if pure_time is not None else f" {'skipped':>10}"
        if _compiled is not None:
            compiled_count, compiled_time = best_of(_compiled.lattice_point_count, args)
            assert compiled_count == points
            row += f" {compiled_time:>13.6f}"
            if pure_time is not None and compiled_time > 0:
                row += f" {pure_time / compiled_time:>7.0f}x"
        else:
            row += f" {'unavailable':>13}"
        print(row)
    if _compiled is None:
        print("note: compiled extension not built; install with Cython to compare")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true", help="tiny sizes only")
    parser.add_argument("--full", action="store_true", help="run pure Python on all sizes")
    args = parser.parse_args(argv)
    if args.quick:
        sizes = [(100, 2), (300, 0)]
    else:
        sizes = [(500, 2), (2000, 2), (2000, 0), (10000, 2), (10000, 0)]
    run(sizes, args.full)
    return 0


if __name__ == "__main__":
    sys.exit(main())
