"""Benchmark of the short-vector box-enumeration backends.

Runs the same complete search over an integer coordinate box with the
compiled (Cython), numpy, and pure-Python backends and reports wall
times.  Workloads are the size-reduced Gram matrices of the maximal
Mordell-Weil lattices produced by the package itself plus a random
positive definite matrix, at a range of norm bounds.

The box volume decides which backends attempt a workload: the pure
Python loop visits every point individually, so it sits out volumes the
vectorized and compiled scans still handle comfortably.  Use --full to
raise the caps.  Every workload that runs on more than one backend also
cross-checks that the vector sets agree.

Usage:  python3 benchmarks/bench_enum.py [--repeat N] [--full]
"""

import argparse
import random
import statistics
import sys
import time
from fractions import Fraction

from mwlattice import matrices as mx
from mwlattice.boxenum import box_short_vectors, enumeration_backend, set_backend
from mwlattice.lattice import _floor_sqrt_plus, as_integer_gram, size_reduce
from mwlattice.mw import mwl
from mwlattice.scenarios import scenario_all_irreducible

CAPS = {"python": 2e6, "numpy": 4e8, "compiled": 1e9}
FULL_FACTOR = 50


def reduced_gram(gram):
    integral, _ = as_integer_gram(gram)
    red, _ = size_reduce(integral)
    return tuple(tuple(int(x) for x in row) for row in red)


def random_gram(rank, seed):
    rng = random.Random(seed)
    basis = [[rng.randint(-3, 3) for _ in range(rank)] for _ in range(rank)]
    for i in range(rank):
        basis[i][i] += 5  # keep the rows independent and the form definite
    return tuple(
        tuple(sum(basis[i][k] * basis[j][k] for k in range(rank)) for j in range(rank))
        for i in range(rank)
    )


def box_volume(gram, bound):
    inv = mx.inverse(gram)
    volume = 1
    for i in range(len(gram)):
        radius = _floor_sqrt_plus(Fraction(bound) * inv[i][i], Fraction(0))
        volume *= 2 * radius + 1
    return volume


def build_workloads():
    e8 = reduced_gram(mwl(scenario_all_irreducible(1)).gram)
    d12 = reduced_gram(mwl(scenario_all_irreducible(2)).gram)
    return [
        ("MWL g=1 (E8), norm <= 2", e8, 2),
        ("MWL g=1 (E8), norm <= 4", e8, 4),
        ("MWL g=1 (E8), norm <= 6", e8, 6),
        ("MWL g=1 (E8), norm <= 8", e8, 8),
        ("random rank 6, norm <= 60", random_gram(6, 2024), 60),
        ("MWL g=2 (D12+), norm <= 2", d12, 2),
    ]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=1,
                        help="timed repetitions per cell (median reported)")
    parser.add_argument("--full", action="store_true",
                        help="raise the per-backend box-volume caps %dx" % FULL_FACTOR)
    args = parser.parse_args(argv)

    backends = ["python", "numpy"]
    if enumeration_backend() == "compiled":
        backends.append("compiled")
    else:
        print("note: compiled extension not importable, benchmarking without it")
    factor = FULL_FACTOR if args.full else 1

    width = max(len(name) for name, _, _ in build_workloads())
    header = "%-*s %14s" % (width, "workload", "box volume")
    for backend in backends:
        header += " %12s" % backend
    print(header)
    print("-" * len(header))

    cells: dict[str, dict[str, float]] = {b: {} for b in backends}
    for name, gram, bound in build_workloads():
        volume = box_volume(gram, bound)
        row = "%-*s %14.3g" % (width, name, volume)
        reference = None
        for backend in backends:
            if volume > CAPS[backend] * factor:
                row += " %12s" % "(skipped)"
                continue
            set_backend(backend)
            times = []
            for _ in range(args.repeat):
                start = time.perf_counter()
                found = box_short_vectors(gram, bound)
                times.append(time.perf_counter() - start)
            if reference is None:
                reference = found
            elif found != reference:
                set_backend(None)
                print(row)
                print("MISMATCH: %s disagrees on %s" % (backend, name))
                return 1
            cells[backend][name] = statistics.median(times)
            row += " %11.3fs" % cells[backend][name]
        print(row)
    set_backend(None)

    print()
    for slow, fast in (("python", "numpy"), ("numpy", "compiled")):
        if fast not in cells:
            continue
        shared = sorted(set(cells[slow]) & set(cells[fast]))
        if not shared:
            continue
        slow_total = sum(cells[slow][n] for n in shared)
        fast_total = sum(cells[fast][n] for n in shared)
        print("%s vs %s on %d shared workloads: %.1fx"
              % (fast, slow, len(shared), slow_total / fast_total))
    print("default backend for this interpreter: %s" % enumeration_backend())
    return 0


if __name__ == "__main__":
    sys.exit(main())
