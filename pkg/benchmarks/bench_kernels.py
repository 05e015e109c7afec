#!/usr/bin/env python3
"""Benchmark the compiled grid kernels against the numpy fallback.

Times the two workloads that dominate real runs: a long single-detuning
transmission trace and a 2D detuning/frequency chart.

    python3 benchmarks/bench_kernels.py [--points N] [--rows M] [--repeat R]
"""

import argparse
import time

import numpy as np

from jcspec import _kernels_py

try:
    from jcspec import _kernels
except ImportError:
    _kernels = None

# equal-coherence benchmark parameters
ARGS = (1.0, 1.0, 5e-3, 1e-2, 0.05, 1e-2)


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def run(points, rows, repeat):
    omega = np.linspace(0.8, 1.2, points)
    delta = np.linspace(-0.2, 0.2, rows)
    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.append(("cython", _kernels))
    else:
        print("compiled kernels not built; timing the fallback only")

    workloads = [
        (f"transmission_grid ({points:,} pts)",
         lambda k: k.transmission_grid(*ARGS, omega), points),
        (f"chart_grid ({rows} x {points:,} pts)",
         lambda k: k.chart_grid(1.0, 5e-3, 1e-2, 0.05, 1e-2, delta, omega),
         rows * points),
    ]

    for label, work, n_evals in workloads:
        print(f"\n{label}")
        reference = None
        for name, module in backends:
            t = best_time(lambda: work(module), repeat)
            rate = n_evals / t / 1e6
            speedup = "" if reference is None else f"  ({reference / t:.2f}x)"
            if reference is None:
                reference = t
            print(f"  {name:<8} {t * 1e3:9.2f} ms   {rate:8.1f} Mpts/s{speedup}")

    if _kernels is not None:
        a = _kernels.transmission_grid(*ARGS, omega)
        b = _kernels_py.transmission_grid(*ARGS, omega)
        print(f"\nmax |cython - python| relative difference: "
              f"{np.max(np.abs(a - b) / np.abs(b)):.3e}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=1_000_000)
    parser.add_argument("--rows", type=int, default=200)
    parser.add_argument("--repeat", type=int, default=5)
    ns = parser.parse_args()
    run(ns.points, ns.rows, ns.repeat)


if __name__ == "__main__":
    main()
