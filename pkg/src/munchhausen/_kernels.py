"""Hot inner loops: permutation matching and sign-pattern bucket counts.

Two interchangeable implementations exist for each kernel: a numba
``@njit`` version and a pure-numpy version.  The numpy path is selected by
setting the environment variable ``MUNCH_NO_NUMBA=1`` (or automatically if
numba is not importable).  Both paths produce bit-identical results;
``benchmarks/bench_kernels.py`` times them against each other.
"""

from __future__ import annotations

import functools
import itertools
import os

import numpy as np

try:
    import numba

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    _HAVE_NUMBA = False

USE_NUMBA = _HAVE_NUMBA and os.environ.get("MUNCH_NO_NUMBA", "") not in ("1", "true", "yes")


@functools.lru_cache(maxsize=16)
def permutation_table(n: int) -> np.ndarray:
    """All permutations of (1..n) in lexicographic order, shape (n!, n).
    Row 0 is the identity."""
    if n > 10:
        raise ValueError(f"permutation table for n={n} is too large")
    table = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int64)
    table.flags.writeable = False
    return table


# ---------------------------------------------------------------------------
# match_count: how many assignments reproduce a target sign vector
# ---------------------------------------------------------------------------

def _match_count_numpy(entries: np.ndarray, perms: np.ndarray, target: np.ndarray):
    if entries.shape[0] == 0:
        return perms.shape[0], (1 if perms.shape[0] > 1 else -1)
    signs = np.sign(entries.astype(np.int64) @ perms.T)
    matches = (signs == target[:, None].astype(np.int64)).all(axis=0)
    idx = np.flatnonzero(matches)
    count = int(idx.size)
    non_identity = idx[idx != 0]
    first = int(non_identity[0]) if non_identity.size else -1
    return count, first


if _HAVE_NUMBA:

    @numba.njit(cache=True)
    def _match_count_numba(entries, perms, target):  # pragma: no cover - jitted
        nperm, n = perms.shape
        k = entries.shape[0]
        count = 0
        first = -1
        for p in range(nperm):
            ok = True
            for i in range(k):
                s = 0
                for j in range(n):
                    s += entries[i, j] * perms[p, j]
                sg = 0
                if s > 0:
                    sg = 1
                elif s < 0:
                    sg = -1
                if sg != target[i]:
                    ok = False
                    break
            if ok:
                count += 1
                if p != 0 and first == -1:
                    first = p
        return count, first


def match_count(entries: np.ndarray, perms: np.ndarray, target: np.ndarray):
    """Return (number of permutation rows whose sign vector equals target,
    index of the first matching non-identity row or -1)."""
    if USE_NUMBA and entries.shape[0] > 0:
        return _match_count_numba(
            entries.astype(np.int64), perms, target.astype(np.int64)
        )
    return _match_count_numpy(entries, perms, target)


# ---------------------------------------------------------------------------
# bucket_singleton: sign-pattern multiplicities over all assignments
# ---------------------------------------------------------------------------

def _bucket_singleton_numpy(cols: np.ndarray, perms: np.ndarray) -> int:
    k = cols.shape[0]
    if k == 0:
        return 0 if perms.shape[0] == 1 else -1
    pows = 3 ** np.arange(k, dtype=np.int64)
    signs = np.sign(perms @ cols.T.astype(np.int64)) + 1  # (n!, k) over {0,1,2}
    codes = signs @ pows
    uniq, first_idx, counts = np.unique(codes, return_index=True, return_counts=True)
    singleton_first = first_idx[counts == 1]
    return int(singleton_first.min()) if singleton_first.size else -1


if _HAVE_NUMBA:

    @numba.njit(cache=True)
    def _bucket_singleton_numba(cols, perms, n_codes):  # pragma: no cover - jitted
        nperm, n = perms.shape
        k = cols.shape[0]
        counts = np.zeros(n_codes, dtype=np.int64)
        first = np.full(n_codes, -1, dtype=np.int64)
        for p in range(nperm):
            code = 0
            pw = 1
            for i in range(k):
                s = 0
                for j in range(n):
                    s += cols[i, j] * perms[p, j]
                sg = 1
                if s > 0:
                    sg = 2
                elif s < 0:
                    sg = 0
                code += sg * pw
                pw *= 3
            counts[code] += 1
            if first[code] == -1:
                first[code] = p
        best = -1
        for c in range(n_codes):
            if counts[c] == 1 and (best == -1 or first[c] < best):
                best = first[c]
        return best


def bucket_singleton(cols: np.ndarray, perms: np.ndarray) -> int:
    """Bucket the sign vectors of ``perms @ cols.T`` by pattern; return the
    permutation index achieving the earliest singleton bucket, or -1 if
    every pattern is achieved at least twice.

    cols is a k x n column block (one candidate column subset); perms is the
    full (n!, n) assignment table.
    """
    k = cols.shape[0]
    if USE_NUMBA and 0 < k <= 16:
        return int(_bucket_singleton_numba(cols.astype(np.int64), perms, 3**k))
    return _bucket_singleton_numpy(cols, perms)
