"""Time the Jacobi kernel for each available backend.

    python3 benchmarks/bench_eigensolver.py [--sizes 10 20 40 80] [--repeat 3]
"""

import argparse
import random
import time

import numpy as np

from absgraph import _kernels
from absgraph.graph import from_edge_list, pair_order
from absgraph.spectral import WeightKind, build_weighted_matrix, eigenvalues_symmetric


def random_graph(n, p, rng):
    return from_edge_list(n, [e for e in pair_order(n) if rng.random() < p])


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 40, 80])
    ap.add_argument("--p", type=float, default=0.3)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    backends = sorted(_kernels.BACKENDS)
    print(f"{'n':>5}" + "".join(f"{b + ' (ms)':>16}" for b in backends) + f"{'speedup':>10}")
    for n in args.sizes:
        m = build_weighted_matrix(random_graph(n, args.p, rng), WeightKind.ABS)
        ref = np.linalg.eigvalsh(m.entries)[::-1]
        times = {}
        for b in backends:
            spec = eigenvalues_symmetric(m, backend=b)
            assert np.allclose(spec.values, ref, atol=1e-9), b
            times[b] = best_of(lambda: eigenvalues_symmetric(m, backend=b), args.repeat)
        row = f"{n:>5}" + "".join(f"{times[b] * 1e3:>16.2f}" for b in backends)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
