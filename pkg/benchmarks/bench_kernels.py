"""Benchmark the banded inertia kernels: compiled extension vs pure Python.

Times the two primitives that dominate the 2-D positivity scans
(eigenvalue counting below a shift, and smallest-eigenvalue bisection) on
representative matrix sizes, then times a full scan with whichever backend
the package selected at import.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeats 5] [--scan-steps 100]
"""

import argparse
import statistics
import time

import numpy as np

from chebwell import _kernels
from chebwell.analysis import scan_2d
from chebwell.metrics import l_matrix


def _flat_pentadiagonal(n, lam, mu):
    m = l_matrix(n, lam, mu).matrix
    return np.ascontiguousarray(m.band_storage().ravel()), m.dim, m.half_bandwidth


def _time(fn, repeats):
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def bench_kernel(name, make_call, repeats):
    backends = [("pure", _kernels.pure)]
    if _kernels.compiled is not None:
        backends.append(("compiled", _kernels.compiled))
    times = {}
    for label, module in backends:
        call = make_call(module)
        call()
        times[label] = _time(call, repeats)
    pure_t = times["pure"]
    line = f"{name:<34s} pure {pure_t * 1e3:9.3f} ms"
    if "compiled" in times:
        comp_t = times["compiled"]
        line += f"   compiled {comp_t * 1e3:9.3f} ms   speedup {pure_t / comp_t:6.1f}x"
    print(line)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--scan-steps", type=int, default=100)
    args = parser.parse_args()

    print(f"selected backend: {_kernels.BACKEND}")
    cases = [
        ("count_below, N=8 pentadiagonal", 8, 2000),
        ("count_below, N=50 pentadiagonal", 50, 400),
        ("count_below, N=200 pentadiagonal", 200, 100),
    ]
    for name, n, calls in cases:
        ab, dim, b = _flat_pentadiagonal(n, 0.31, 0.17)

        def make_counts(module, ab=ab, dim=dim, b=b, calls=calls):
            def run():
                for _ in range(calls):
                    module.count_below(ab, dim, b, 0.0, 1e-300)
            return run

        bench_kernel(f"{name} x{calls}", make_counts, args.repeats)

    for name, n, calls in [("min_eig, N=8 pentadiagonal", 8, 500),
                           ("min_eig, N=100 pentadiagonal", 100, 50)]:
        ab, dim, b = _flat_pentadiagonal(n, 0.31, 0.17)

        def make_mins(module, ab=ab, dim=dim, b=b, calls=calls):
            def run():
                for _ in range(calls):
                    module.min_eig(ab, dim, b, 1e-13, 0.0)
            return run

        bench_kernel(f"{name} x{calls}", make_mins, args.repeats)

    steps = args.scan_steps
    start = time.perf_counter()
    scan_2d(8, (-1.0, 1.0), (-1.5, 1.5), steps)
    elapsed = time.perf_counter() - start
    print(f"scan_2d N=8 {steps}x{steps} with {_kernels.BACKEND} backend: "
          f"{elapsed:.2f} s ({elapsed / steps ** 2 * 1e6:.1f} us per cell)")
    if _kernels.compiled is None:
        print("compiled kernel unavailable; rebuild the extension to compare")
    else:
        print("set CHEBWELL_PURE_KERNELS=1 and re-run to time the scan on the "
              "pure backend")


if __name__ == "__main__":
    main()
