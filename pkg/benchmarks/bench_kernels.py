"""Benchmark the JIT kernels against their pure-Python fallbacks.

Runs the exact-rank elimination on coboundary matrices of skeleta of large
simplices and the exhaustive balance search on signed cycles, timing the
active backend (numba unless HODGELAP_DISABLE_NUMBA is set) against the
pure implementations.  Usage:

    python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from hodgelap._kernels import (
    KERNEL_BACKEND,
    _bareiss_rank_i64,
    _bareiss_rank_i64_impl,
    _exhaustive_balance,
    _exhaustive_balance_impl,
    bareiss_rank_pyint,
)
from hodgelap.core import from_facets
from hodgelap.operators import coboundary_matrix


def timeit(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def rank_cases():
    for n_vertices, skel in ((12, 2), (16, 2)):
        k = from_facets([list(range(n_vertices))]).skeleton(skel)
        mat = coboundary_matrix(k, skel - 1).matrix.toarray().astype(np.int64)
        yield f"rank D_{skel - 1} of {skel}-skeleton(simplex_{n_vertices}) {mat.shape}", mat


def balance_case(n):
    # cycle whose sign product breaks the target parity: unsatisfiable, so
    # the search sweeps all 2**n assignments
    edge_a = np.arange(n, dtype=np.int64)
    edge_b = np.roll(edge_a, -1).astype(np.int64)
    edge_s = np.ones(n, dtype=np.int64)
    edge_s[0] = -1 if n % 2 == 0 else 1
    return edge_a, edge_b, edge_s


def main():
    print(f"active backend: {KERNEL_BACKEND}")
    print(f"{'case':58s} {'backend':>10s} {'pure-py':>10s} {'speedup':>8s}")
    for label, mat in rank_cases():
        _bareiss_rank_i64(mat.copy())  # warm the JIT cache
        t_fast, r_fast = timeit(lambda: _bareiss_rank_i64(mat.copy()))
        t_pure, r_pure = timeit(
            lambda: _bareiss_rank_i64_impl(mat.copy()), repeat=1
        )
        t_pyint, r_pyint = timeit(
            lambda: bareiss_rank_pyint([[int(v) for v in row] for row in mat]),
            repeat=1,
        )
        assert r_fast == r_pure == r_pyint
        print(f"{label:58s} {t_fast:9.4f}s {t_pure:9.4f}s {t_pure / t_fast:7.1f}x")
        print(f"{'  (arbitrary-precision fallback)':58s} {'':>10s} {t_pyint:9.4f}s")

    for n in (16, 18):
        ea, eb, es = balance_case(n)
        _exhaustive_balance(n, ea, eb, es, -1)
        t_fast, r_fast = timeit(lambda: _exhaustive_balance(n, ea, eb, es, -1))
        t_pure, r_pure = timeit(
            lambda: _exhaustive_balance_impl(n, ea, eb, es, -1), repeat=1
        )
        assert r_fast == r_pure == -1
        label = f"exhaustive balance sweep, 2^{n} assignments"
        print(f"{label:58s} {t_fast:9.4f}s {t_pure:9.4f}s {t_pure / t_fast:7.1f}x")


if __name__ == "__main__":
    main()
