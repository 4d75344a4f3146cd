"""Timing comparison of the pure-Python and compiled scan kernels.

    python -m obci.benchmarks [--sizes 2 3] [--repeat 5] [--fast-only-size 4]

Both backends are checked for element-by-element agreement before any
timing is reported.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import scan


def _time(fn, n: int, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(n)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="*", default=[2, 3],
                        help="carrier sizes timed on both backends")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--fast-only-size", type=int, default=None,
                        help="additionally time the compiled backend alone "
                             "at this size (pure Python would be too slow)")
    args = parser.parse_args(argv)

    if scan.valid_tables_fast is None:
        print("compiled backend unavailable; timing pure Python only")
    print(f"{'n':>3} {'candidates':>12} {'valid':>7} {'python':>12} "
          f"{'cython':>12} {'speedup':>8}")
    for n in args.sizes:
        ref = scan.valid_tables_py(n)
        t_py = _time(scan.valid_tables_py, n, args.repeat)
        if scan.valid_tables_fast is not None:
            got = scan.valid_tables_fast(n)
            if got != ref:
                print(f"BACKEND MISMATCH at n={n}", file=sys.stderr)
                return 1
            t_fast = _time(scan.valid_tables_fast, n, args.repeat)
            speed = f"{t_py / t_fast:8.1f}x"
            fast_col = f"{t_fast * 1e3:10.3f}ms"
        else:
            fast_col = f"{'-':>12}"
            speed = f"{'-':>8}"
        print(f"{n:>3} {scan.candidate_count(n):>12} {len(ref):>7} "
              f"{t_py * 1e3:10.3f}ms {fast_col} {speed}")
    if args.fast_only_size and scan.valid_tables_fast is not None:
        n = args.fast_only_size
        t0 = time.perf_counter()
        found = len(scan.valid_tables_fast(n))
        dt = time.perf_counter() - t0
        print(f"{n:>3} {scan.candidate_count(n):>12} {found:>7} "
              f"{'-':>12} {dt * 1e3:10.3f}ms {'-':>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
