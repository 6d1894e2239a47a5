"""Exact computation of the minimum number of weighings B(n).

B(n) is the least k for which some k x n design over {-1,0,+1} proves the
identity labeling of coins weighing 1..n grams.  Since a conclusive design
must have pairwise distinct columns, the search runs over n-subsets of the
3^k possible columns (colexicographic order, columns indexed by their
base-3 code).  For each subset, the sign patterns of all n! column-to-
weight assignments are bucketed: a pattern achieved by exactly one
assignment yields a conclusive matrix, namely the one whose column j
carries weight j under that assignment.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

import numpy as np

from . import _kernels
from .bounds import excluded, trivial_lower
from .core import CoinAssignment, WeighingMatrix
from .bounds import chain_construction

SOLVER_MAX_COINS = 9
_CHUNK = 2048


class SearchStatus(Enum):
    WITNESS = "witness"
    EXHAUSTED_NONE = "exhausted-none"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    matrix: WeighingMatrix | None = None
    assignment: CoinAssignment | None = None
    explored: int = 0  # subsets fully bucket-counted
    checkpoint: int = -1  # last completed subset index (budget resume hint)


class Minimality(Enum):
    PROVEN = "proven"
    UPPER_BOUND_ONLY = "upper-bound-only"


@dataclass(frozen=True)
class BaronResult:
    n: int
    value: int
    witness: WeighingMatrix
    minimality: Minimality


@dataclass(frozen=True)
class SolveConfig:
    jobs: int = field(default_factory=lambda: os.cpu_count() or 1)
    budget: int = 10**8  # assignment evaluations per (n, k) pass
    n_cap: int = SOLVER_MAX_COINS

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.budget < 1:
            raise ValueError("budget must be >= 1")


def column_block(codes, k: int) -> np.ndarray:
    """k x len(codes) entry block for the columns with the given base-3
    codes (row 0 most significant, digit order -1 < 0 < +1)."""
    cols = np.empty((k, len(codes)), dtype=np.int8)
    for pos, code in enumerate(codes):
        for i in range(k - 1, -1, -1):
            cols[i, pos] = code % 3 - 1
            code //= 3
    return cols


def colex_subsets(m: int, n: int) -> Iterator[tuple[int, ...]]:
    """All n-subsets of 0..m-1 as sorted tuples, in colexicographic order."""
    if n == 0:
        yield ()
        return
    for top in range(n - 1, m):
        for rest in colex_subsets(top, n - 1):
            yield rest + (top,)


def _scan_chunk(chunk: list[tuple[int, ...]], k: int, perms: np.ndarray):
    """Return (offset-in-chunk, perm-index) of the first subset admitting a
    singleton sign-pattern bucket, or None."""
    for off, codes in enumerate(chunk):
        cols = column_block(codes, k)
        p = _kernels.bucket_singleton(cols, perms)
        if p >= 0:
            return off, p
    return None


def _witness_from(codes, k: int, perm: np.ndarray) -> tuple[WeighingMatrix, CoinAssignment]:
    cols = column_block(codes, k)
    n = len(codes)
    entries = np.empty((k, n), dtype=np.int8)
    for pos in range(n):
        entries[:, perm[pos] - 1] = cols[:, pos]
    return WeighingMatrix(entries), CoinAssignment(perm)


def exists_munchhausen(n: int, k: int, config: SolveConfig | None = None) -> SearchOutcome:
    """Search for a conclusive k x n design.

    Trivially none exists when n > 3^k (two columns would coincide), and
    none exists when the exclusion inequality C(3^k, n) < (ceil(k/3))!
    holds; both cases return EXHAUSTED_NONE without enumeration.
    """
    config = config or SolveConfig()
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    universe = 3**k
    if n > universe or excluded(n, k):
        return SearchOutcome(SearchStatus.EXHAUSTED_NONE)

    perms = _kernels.permutation_table(n)
    nperm = perms.shape[0]
    total_subsets = math.comb(universe, n)
    affordable = config.budget // nperm
    if affordable == 0:
        return SearchOutcome(SearchStatus.BUDGET_EXCEEDED, explored=0, checkpoint=-1)

    gen = colex_subsets(universe, n)
    done = 0
    found = None  # (subset_index, codes, perm_index)
    while done < total_subsets and found is None:
        if done >= affordable:
            return SearchOutcome(
                SearchStatus.BUDGET_EXCEEDED, explored=done, checkpoint=done - 1
            )
        take = min(_CHUNK * config.jobs, total_subsets - done, affordable - done)
        block = [s for _, s in zip(range(take), gen)]
        chunks = [block[i : i + _CHUNK] for i in range(0, len(block), _CHUNK)]
        if config.jobs > 1 and len(chunks) > 1:
            with ThreadPoolExecutor(max_workers=config.jobs) as pool:
                results = list(pool.map(_scan_chunk, chunks, [k] * len(chunks), [perms] * len(chunks)))
        else:
            results = [_scan_chunk(c, k, perms) for c in chunks]
        # deterministic reduce: lowest-indexed chunk, then lowest offset
        base = done
        for ci, res in enumerate(results):
            if res is not None:
                off, p = res
                idx = base + ci * _CHUNK + off
                found = (idx, chunks[ci][off], p)
                break
        done += take

    if found is None:
        return SearchOutcome(
            SearchStatus.EXHAUSTED_NONE, explored=done, checkpoint=done - 1
        )
    idx, codes, p = found
    matrix, assignment = _witness_from(codes, k, perms[p])
    return SearchOutcome(
        SearchStatus.WITNESS,
        matrix=matrix,
        assignment=assignment,
        explored=idx + 1,
        checkpoint=idx,
    )


def baron(n: int, config: SolveConfig | None = None) -> BaronResult:
    """Compute B(n) with a minimality certificate.

    Iterates k upward from the trivial lower bound; the first k with a
    witness wins.  Minimality is PROVEN only if every smaller k was
    exhausted (or ruled out by a bound) within budget.  At k = n-1 the
    chain design is used directly; it always verifies.
    """
    config = config or SolveConfig()
    if not 1 <= n <= config.n_cap:
        raise ValueError(f"n must be in 1..{config.n_cap}")
    proven = True
    for k in range(trivial_lower(n), max(n - 1, 0)):
        outcome = exists_munchhausen(n, k, config)
        if outcome.status is SearchStatus.WITNESS:
            minimality = Minimality.PROVEN if proven else Minimality.UPPER_BOUND_ONLY
            return BaronResult(n, k, outcome.matrix, minimality)
        if outcome.status is SearchStatus.BUDGET_EXCEEDED:
            proven = False
    # chain design: (n-1) x n, provably conclusive, so B(n) <= n-1
    minimality = Minimality.PROVEN if proven else Minimality.UPPER_BOUND_ONLY
    return BaronResult(n, max(n - 1, 0), chain_construction(n), minimality)


def sequence(n_max: int, config: SolveConfig | None = None) -> list[BaronResult]:
    config = config or SolveConfig()
    if not 1 <= n_max <= config.n_cap:
        raise ValueError(f"n_max must be in 1..{config.n_cap}")
    return [baron(n, config) for n in range(1, n_max + 1)]


def format_bfile(results: list[BaronResult]) -> str:
    """OEIS b-file text: ``<n> <B(n)>`` data lines; entries whose minimality
    is not proven appear only as comments."""
    lines = []
    for r in results:
        if r.minimality is Minimality.PROVEN:
            lines.append(f"{r.n} {r.value}")
        else:
            lines.append(f"# {r.n}: B({r.n}) <= {r.value} (minimality not proven within budget)")
    return "\n".join(lines) + "\n"
