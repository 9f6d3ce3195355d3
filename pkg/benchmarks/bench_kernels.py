#!/usr/bin/env python3
"""Benchmark the compiled integer kernels against the pure-Python fallback.

The workload mirrors what dominates the identity checks: dense products
and Kronecker expansions of maps on A^{x3} for a 6-dimensional base
(216 x 216 matrices), plus a rational matrix with a nontrivial common
denominator.
"""

import random
import time

from vncore import _kernels_py

try:
    from vncore import _kernels
except ImportError:
    _kernels = None


def bench(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = random.Random(99)
    size = 216
    a = [rng.randint(-2, 2) for _ in range(size * size)]
    b = [rng.randint(-2, 2) for _ in range(size * size)]
    small = [rng.randint(-2, 2) for _ in range(36 * 36)]
    big = [rng.randint(-10 ** 25, 10 ** 25) for _ in range(64 * 64)]

    cases = [
        ("matmul 216x216 (small ints)",
         lambda k: k.matmul(a, b, size, size, size)),
        ("matmul 64x64 (bignum path)",
         lambda k: k.matmul(big, big, 64, 64, 64)),
        ("kron 36x36 (x) 6x6",
         lambda k: k.kron(small, small[:36], 36, 36, 6, 6)),
    ]

    print(f"{'case':<32} {'python':>10}  {'cython':>10}  speedup")
    for name, run in cases:
        t_py = bench(run, _kernels_py)
        if _kernels is None:
            print(f"{name:<32} {t_py * 1e3:9.1f}ms   (extension not built)")
            continue
        t_cy = bench(run, _kernels)
        assert run(_kernels) == run(_kernels_py), "backends disagree"
        print(f"{name:<32} {t_py * 1e3:9.1f}ms  {t_cy * 1e3:9.1f}ms  "
              f"{t_py / t_cy:6.1f}x")


if __name__ == "__main__":
    main()
