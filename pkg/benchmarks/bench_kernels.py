#!/usr/bin/env python3
"""Time the numba kernels against the pure-numpy fallbacks.

Run after installing the package:

    python3 benchmarks/bench_kernels.py

The same comparison can be reproduced end to end by running the CLI with
MUNCH_NO_NUMBA=1 in the environment.
"""

import time

import numpy as np

from munchhausen import _kernels
from munchhausen.solve import colex_subsets, column_block


def bench(label, fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    print(f"{label:45s} {best * 1e3:10.2f} ms")
    return result


def bench_match_count(n, k, seed=0):
    rng = np.random.default_rng(seed)
    entries = rng.integers(-1, 2, size=(k, n)).astype(np.int64)
    perms = _kernels.permutation_table(n)
    target = np.sign(entries @ perms[0]).astype(np.int64)

    r_np = bench(
        f"match_count numpy   (n={n}, k={k}, {perms.shape[0]} perms)",
        lambda: _kernels._match_count_numpy(entries, perms, target),
    )
    if _kernels._HAVE_NUMBA:
        _kernels._match_count_numba(entries, perms, target)  # warm up JIT
        r_nb = bench(
            f"match_count numba   (n={n}, k={k}, {perms.shape[0]} perms)",
            lambda: _kernels._match_count_numba(entries, perms, target),
        )
        assert tuple(r_np) == tuple(r_nb), (r_np, r_nb)


def bench_bucket(n, k, n_subsets=500):
    perms = _kernels.permutation_table(n)
    subsets = []
    for _, s in zip(range(n_subsets), colex_subsets(3**k, n)):
        subsets.append(column_block(s, k))

    def run_numpy():
        return [_kernels._bucket_singleton_numpy(c, perms) for c in subsets]

    r_np = bench(
        f"bucket_singleton numpy (n={n}, k={k}, {len(subsets)} subsets)", run_numpy
    )
    if _kernels._HAVE_NUMBA:
        cols64 = [c.astype(np.int64) for c in subsets]
        _kernels._bucket_singleton_numba(cols64[0], perms, 3**k)  # warm up JIT

        def run_numba():
            return [_kernels._bucket_singleton_numba(c, perms, 3**k) for c in cols64]

        r_nb = bench(
            f"bucket_singleton numba (n={n}, k={k}, {len(subsets)} subsets)", run_numba
        )
        assert r_np == r_nb


def main():
    print(f"numba available: {_kernels._HAVE_NUMBA}, selected: {_kernels.USE_NUMBA}")
    bench_match_count(n=8, k=4)
    bench_match_count(n=9, k=5)
    bench_bucket(n=5, k=3)
    bench_bucket(n=7, k=3, n_subsets=100)


if __name__ == "__main__":
    main()
