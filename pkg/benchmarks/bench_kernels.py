"""Time the compiled enumeration kernels against the numpy fallback.

Runs the two workloads behind min_block_distance (full codeword
enumeration and the streaming block-weight scan) on a mid-size binary
code, checks both backends return identical answers, and prints the
ratio.  Usage:

    python3 benchmarks/bench_kernels.py [--k K] [--n N] [--repeat R]
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from moakit import prime_power
from moakit import _kernels_py

try:
    from moakit import _ckernels
except ImportError:
    _ckernels = None


def build_instance(k: int, n: int, seed: int):
    rng = random.Random(seed)
    F = prime_power(2)
    gen = np.zeros((k, n), dtype=np.uint8)
    gen[:, :k] = np.eye(k, dtype=np.uint8)
    for i in range(k):
        for j in range(k, n):
            gen[i, j] = rng.randrange(2)
    sizes = []
    left = n
    while left:
        b = min(rng.randrange(1, 4), left)
        sizes.append(b)
        left -= b
    starts = np.cumsum([0] + sizes)
    return gen, F.add, F.mul, starts


def timed(fn, repeat: int):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return result, best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=16, help="code dimension")
    ap.add_argument("--n", type=int, default=28, help="code length")
    ap.add_argument("--repeat", type=int, default=3, help="repeats, best kept")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    gen, add, mul, starts = build_instance(args.k, args.n, args.seed)
    print(f"instance: [n={args.n}, k={args.k}] binary, "
          f"{2**args.k} codewords, {len(starts) - 1} blocks")

    if _ckernels is None:
        print("compiled kernels are not built; nothing to compare")
        return

    for label, work_py, work_c in (
        (
            "codeword_table",
            lambda: _kernels_py.codeword_table(gen, 2, add, mul),
            lambda: np.asarray(_ckernels.codeword_table(gen, 2, add, mul)),
        ),
        (
            "min_block_weight",
            lambda: _kernels_py.min_block_weight(gen, 2, add, mul, starts),
            lambda: int(_ckernels.min_block_weight(gen, 2, add, mul, starts)),
        ),
    ):
        r_py, t_py = timed(work_py, args.repeat)
        r_c, t_c = timed(work_c, args.repeat)
        if label == "codeword_table":
            assert np.array_equal(r_py, r_c), "backends disagree"
        else:
            assert r_py == r_c, "backends disagree"
        print(f"  {label:>16}: python {t_py * 1e3:8.1f} ms   "
              f"compiled {t_c * 1e3:8.1f} ms   speedup {t_py / t_c:5.1f}x")
    print(f"minimum block weight found: {r_c}")


if __name__ == "__main__":
    main()
