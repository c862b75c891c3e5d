"""Time the exhaustive semigraphoid scan: numba kernel vs numpy fallback.

Usage: python benchmarks/bench_scan.py [--n 4] [--log2-span 20] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from semigraphoids import _kernels
from semigraphoids.ci import gamma
from semigraphoids.semigraphoid import axiom_masks


def timed(fn, repeat: int) -> tuple[float, int]:
    best, result = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--log2-span", type=int, default=20, help="scan the first 2**k masks")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    pairs = axiom_masks(args.n)
    lhs = np.array([L for L, _ in pairs], dtype=np.uint64)
    rhs = np.array([R for _, R in pairs], dtype=np.uint64)
    stop = min(1 << args.log2_span, 1 << gamma(args.n))

    rows = []
    if _kernels.HAVE_NUMBA:
        _kernels.count_passing(lhs, rhs, 0, 64, use_numba=True)  # compile
        rows.append(("numba", *timed(lambda: _kernels.count_passing(lhs, rhs, 0, stop, use_numba=True), args.repeat)))
    rows.append(("numpy", *timed(lambda: _kernels.count_passing(lhs, rhs, 0, stop, use_numba=False), args.repeat)))

    print(f"n={args.n}  masks={stop}  axioms={len(pairs)}")
    for name, secs, count in rows:
        rate = stop / secs / 1e6
        print(f"{name:6s} {secs:8.3f} s  {rate:8.2f} Mmask/s  passing={count}")
    if len({c for _, _, c in rows}) != 1:
        raise SystemExit("backends disagree")


if __name__ == "__main__":
    main()
