#!/usr/bin/env python3
"""Compare the numba and numpy kernel backends.

Runs both backends in-process on the same inputs (numba compile time
excluded by a warm-up call) and reports median wall time per call:

* chain_loads on random complete assignments of growing size;
* the exhaustive assignment search on oracle-sized random instances.

Usage: python3 benchmarks/bench_kernels.py [--repeat 5] [--seed 0] [--large]
"""

import argparse
import statistics
import sys
import time

import numpy as np

from resdel import kernels, random_instance
from resdel.arrays import GraphArrays


def timed(fn, args, repeat):
    samples = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(*args)
        samples.append(time.perf_counter() - start)
    return statistics.median(samples), out


def random_forest(rng, n, n_sinks):
    # every non-sink points to a strictly later index, so chains end at sinks
    is_sink = np.zeros(n, bool)
    is_sink[n - n_sinks :] = True
    idx = np.arange(n)
    succ = np.where(is_sink, -1, rng.integers(np.minimum(idx + 1, n - 1), n)).astype(np.int64)
    weight = rng.integers(1, 4, n).astype(np.int64)
    return succ, weight, is_sink


def bench_chain_loads(rng, repeat):
    print(f"{'chain_loads n':>16} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for n in (1_000, 10_000, 100_000, 1_000_000):
        args = random_forest(rng, n, max(1, n // 100))
        kernels.chain_loads_numba(*args)
        t_nb, (a, _) = timed(kernels.chain_loads_numba, args, repeat)
        t_np, (b, _) = timed(kernels.chain_loads_numpy, args, repeat)
        assert a.tolist() == b.tolist()
        print(f"{n:>16} {t_nb * 1e3:>10.3f} {t_np * 1e3:>10.3f} {t_np / t_nb:>8.1f}")


def bench_search(seed, repeat, large):
    print(f"{'search n/t':>16} {'numba ms':>10} {'python ms':>10} {'speedup':>8}")
    sizes = ((8, 2), (10, 3), (12, 3)) + (((14, 4),) if large else ())
    for n, t in sizes:
        insts = [random_instance(n, t, edge_prob="1/3", seed=seed + i) for i in range(5)]
        arrs = [GraphArrays.from_graph(x.graph) for x in insts]
        calls = [
            (a.offsets, a.targets, a.weight, a.is_sink, a.order, np.int64(a.weight.sum()), True, np.int64(1))
            for a in arrs
        ]

        def run(fn):
            return [fn(*c)[0] for c in calls]

        run(kernels.search_numba)
        t_nb, a = timed(run, (kernels.search_numba,), repeat)
        t_py, b = timed(run, (kernels.search_python,), repeat)
        assert a == b
        print(f"{f'{n}/{t}':>16} {t_nb * 1e3:>10.3f} {t_py * 1e3:>10.3f} {t_py / t_nb:>8.1f}")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--large", action="store_true", help="add a 14-vertex search case (slow in python)")
    args = parser.parse_args(argv)
    if not kernels.HAVE_NUMBA:
        print("numba backend unavailable (unset RESDEL_DISABLE_NUMBA or install numba)", file=sys.stderr)
        return 1
    rng = np.random.default_rng(args.seed)
    bench_chain_loads(rng, args.repeat)
    print()
    bench_search(args.seed, args.repeat, args.large)
    return 0


if __name__ == "__main__":
    sys.exit(main())
