"""Compiled vs pure-Python kernels on the workloads the package actually runs.

    python benchmarks/bench_kernels.py [--order N] [--repeat R]
"""

import argparse
import timeit

from thetabound import _pykernels, kernels

try:
    from thetabound import _ckernels
except ImportError:
    _ckernels = None


def workloads(n):
    dense = [(-1) ** i * (i % 7) for i in range(n + 1)]
    dense[0] = 1
    odd_parts = list(range(1, n + 1, 2))
    g_parts = list(range(9, n + 1, 4)) + list(range(11, n + 1, 4))

    # 1/((1-q)...(1-q^5)) stays well inside int64 at these orders
    five = [1] + [0] * n
    for e in range(1, 6):
        _pykernels.multiply_one_minus(five, e)

    def divide(mod):
        def run():
            c = [0] * (n + 1)
            c[0] = 1
            for e in range(500, n + 1, 650):
                mod.divide_one_minus(c, e)
        return run

    yield "convolve", lambda mod: (lambda: mod.convolve(dense, dense, min(n, 4000)))
    yield "inverse", lambda mod: (lambda: mod.inverse(five, n))
    yield "divide_one_minus", divide
    yield "knapsack odd parts", lambda mod: (lambda: mod.knapsack(odd_parts, n))
    yield "knapsack g(1,4)", lambda mod: (lambda: mod.knapsack(g_parts, n))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=20000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"backend selected at import: {kernels.BACKEND}")
    if _ckernels is None:
        print("compiled module not built; only the reference timings are shown")
    print(f"{'kernel':<24}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, make in workloads(args.order):
        py = min(timeit.repeat(make(_pykernels), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:<24}{py:>12.4f}{'-':>12}{'-':>10}")
            continue
        try:
            cy = min(timeit.repeat(make(_ckernels), number=1, repeat=args.repeat))
        except OverflowError:
            # too wide for int64; time what the dispatcher actually does
            cy = min(timeit.repeat(make(kernels), number=1, repeat=args.repeat))
            name += " *"
        print(f"{name:<24}{py:>12.4f}{cy:>12.4f}{py / cy:>10.1f}")
    print("* int64 overflow: knapsack goes multi-modular, other kernels fall back to Python")


if __name__ == "__main__":
    main()
