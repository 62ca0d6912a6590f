"""Hot numeric kernels, JIT-compiled with numba when available.

Two inner loops in this package are genuine Python-level hotspots and are
worth compiling: exact integer rank (fraction-free Gaussian elimination on
coboundary matrices, used for Betti numbers) and the brute-force orientation
search over all ``2**n`` sign assignments (the oracle that cross-checks the
BFS balance test).  Everything else that is numerically heavy already runs
inside LAPACK.

Backend selection: numba is used when importable unless the environment
variable ``HODGELAP_DISABLE_NUMBA`` is set to a truthy value, in which case
the pure-Python fallbacks run.  ``KERNEL_BACKEND`` records the active path;
``benchmarks/bench_kernels.py`` compares the two.

The int64 Bareiss path guards against overflow (intermediate entries are
determinants of submatrices and can in principle grow); when any entry
exceeds the guard the kernel bails out and the arbitrary-precision Python
fallback finishes the job exactly.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("HODGELAP_DISABLE_NUMBA", "").strip().lower() in (
    "1",
    "true",
    "yes",
    "on",
)

# Magnitudes up to 2**30 keep every Bareiss product below 2**60, so the
# difference of two products fits comfortably in int64.
_OVERFLOW_GUARD = 1 << 30

if not _DISABLED:
    try:
        from numba import njit

        KERNEL_BACKEND = "numba"
    except ImportError:  # pragma: no cover - numba is a declared dependency
        njit = None
        KERNEL_BACKEND = "python"
else:
    njit = None
    KERNEL_BACKEND = "python"


def _bareiss_rank_i64_impl(a):
    m, n = a.shape
    row = 0
    prev = np.int64(1)
    for col in range(n):
        if row >= m:
            break
        piv_row = -1
        for r in range(row, m):
            if a[r, col] != 0:
                piv_row = r
                break
        if piv_row < 0:
            continue
        if piv_row != row:
            for c in range(col, n):
                tmp = a[row, c]
                a[row, c] = a[piv_row, c]
                a[piv_row, c] = tmp
        piv = a[row, col]
        # Overflow guard: inspect the active submatrix before multiplying.
        biggest = np.int64(0)
        for r in range(row, m):
            for c in range(col, n):
                v = a[r, c]
                if v < 0:
                    v = -v
                if v > biggest:
                    biggest = v
        if biggest > _OVERFLOW_GUARD:
            return -1
        for r in range(row + 1, m):
            f = a[r, col]
            for c in range(col + 1, n):
                a[r, c] = (piv * a[r, c] - f * a[row, c]) // prev
            a[r, col] = 0
        prev = piv
        row += 1
    return row


def _exhaustive_balance_impl(n_nodes, edge_a, edge_b, edge_sign, target):
    n_edges = edge_a.shape[0]
    for mask in range(1 << n_nodes):
        ok = True
        for e in range(n_edges):
            xa = 1 - 2 * ((mask >> edge_a[e]) & 1)
            xb = 1 - 2 * ((mask >> edge_b[e]) & 1)
            if xa * xb * edge_sign[e] != target:
                ok = False
                break
        if ok:
            return mask
    return -1


if KERNEL_BACKEND == "numba":
    _bareiss_rank_i64 = njit(cache=True)(_bareiss_rank_i64_impl)
    _exhaustive_balance = njit(cache=True)(_exhaustive_balance_impl)
else:
    _bareiss_rank_i64 = _bareiss_rank_i64_impl
    _exhaustive_balance = _exhaustive_balance_impl


def bareiss_rank_pyint(rows):
    """Exact rank over the rationals with arbitrary-precision integers.

    ``rows`` is a list of lists of Python ints; it is consumed destructively.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    row = 0
    prev = 1
    for col in range(n):
        if row >= m:
            break
        piv_row = -1
        for r in range(row, m):
            if rows[r][col] != 0:
                piv_row = r
                break
        if piv_row < 0:
            continue
        if piv_row != row:
            rows[row], rows[piv_row] = rows[piv_row], rows[row]
        piv = rows[row][col]
        for r in range(row + 1, m):
            f = rows[r][col]
            if f == 0:
                continue
            cur = rows[r]
            top = rows[row]
            for c in range(col + 1, n):
                cur[c] = (piv * cur[c] - f * top[c]) // prev
            cur[col] = 0
        prev = piv
        row += 1
    return row


def exact_rank(matrix) -> int:
    """Rank of an integer matrix, computed exactly (no floating point).

    Uses fraction-free (Bareiss) elimination: all intermediate entries are
    integers, so the result carries no tolerance.  The int64 fast path falls
    back to arbitrary precision if entries grow past the overflow guard.
    """
    a = np.ascontiguousarray(np.asarray(matrix, dtype=np.int64))
    if a.size == 0:
        return 0
    r = _bareiss_rank_i64(a.copy())
    if r >= 0:
        return int(r)
    return bareiss_rank_pyint([[int(v) for v in row] for row in np.asarray(matrix)])


def exhaustive_balance(n_nodes, edges, target):
    """Brute-force search for +/-1 node signs with ``x_a*x_b*s == target``.

    ``edges`` is an iterable of ``(a, b, s)`` with node indices in
    ``range(n_nodes)`` and ``s in {+1, -1}``.  Returns a list of +/-1 node
    signs, or ``None`` when no assignment exists.  Cost is ``O(2**n)``;
    intended as a test oracle for small instances.
    """
    edges = list(edges)
    ea = np.array([e[0] for e in edges], dtype=np.int64)
    eb = np.array([e[1] for e in edges], dtype=np.int64)
    es = np.array([e[2] for e in edges], dtype=np.int64)
    mask = _exhaustive_balance(n_nodes, ea, eb, es, target)
    if mask < 0:
        return None
    return [1 - 2 * ((int(mask) >> k) & 1) for k in range(n_nodes)]
