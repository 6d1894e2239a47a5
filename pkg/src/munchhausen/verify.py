"""Deciding whether a weighing design proves its coin labeling.

A design is conclusive ("unique") when the identity labeling is the only
bijective assignment of weights 1..n that reproduces the observed outcome
signs.  Two checkers are provided:

* :func:`verify_oracle` -- brute force over all n! assignments (n <= 9);
  ground truth, returns the lexicographically smallest witness.
* :func:`verify_fast` -- backtracking search for a second matching
  assignment with interval pruning; agrees with the oracle on the verdict
  but returns the first witness found, not necessarily the smallest.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import (
    CoinAssignment,
    SignVector,
    VerificationResult,
    WeighingMatrix,
    identity_assignment,
    weigh,
)

ORACLE_MAX_COINS = 9


@dataclass(frozen=True)
class VerifyBudget:
    max_nodes: int = 10**8
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be >= 1")


class BudgetExceededError(RuntimeError):
    """Search budget ran out before an answer; carries nodes expanded."""

    def __init__(self, nodes: int):
        super().__init__(f"verification budget exceeded after {nodes} nodes")
        self.nodes = nodes


def _check_witness(matrix: WeighingMatrix, witness: CoinAssignment, outcome: SignVector):
    # Soundness gate: every ambiguous verdict is re-evaluated before return.
    assert not witness.is_identity()
    assert weigh(matrix, witness) == outcome
    return VerificationResult(unique=False, outcome=outcome, witness=witness)


def verify_oracle(matrix: WeighingMatrix) -> VerificationResult:
    """Exhaustive check over all n! assignments.

    Unique iff the identity is the only assignment reproducing its own
    outcome; otherwise the witness is the lexicographically smallest
    non-identity assignment that matches.
    """
    if matrix.n > ORACLE_MAX_COINS:
        raise ValueError(f"oracle limited to n <= {ORACLE_MAX_COINS}, got {matrix.n}")
    outcome = weigh(matrix, identity_assignment(matrix.n))
    perms = _kernels.permutation_table(matrix.n)
    count, first = _kernels.match_count(matrix.entries, perms, outcome.signs)
    assert count >= 1  # the identity always matches its own outcome
    if count == 1:
        return VerificationResult(unique=True, outcome=outcome)
    return _check_witness(matrix, CoinAssignment(perms[first]), outcome)


def _duplicate_column_pair(matrix: WeighingMatrix):
    """First (j1, j2) with identical columns, scanning j2 ascending; None if
    all columns are distinct.  For k = 0 every column is the empty tuple."""
    seen: dict[int, int] = {}
    for j, code in enumerate(matrix.column_codes()):
        code = int(code)
        if code in seen:
            return seen[code], j
        seen[code] = j
    return None


def verify_fast(
    matrix: WeighingMatrix, budget: VerifyBudget | None = None
) -> VerificationResult:
    """Backtracking search for a second assignment matching the identity's
    outcome.  Duplicate columns short-circuit to ambiguous with the swap
    witness.  Raises BudgetExceededError if max_nodes runs out.
    """
    budget = budget or VerifyBudget()
    n, k = matrix.n, matrix.k
    outcome = weigh(matrix, identity_assignment(n))

    dup = _duplicate_column_pair(matrix)
    if dup is not None:
        j1, j2 = dup
        w = np.arange(1, n + 1)
        w[j1], w[j2] = w[j2], w[j1]
        return _check_witness(matrix, CoinAssignment(w), outcome)

    if n == 1:
        return VerificationResult(unique=True, outcome=outcome)

    entries = matrix.entries.astype(np.int64)
    target = outcome.signs.astype(np.int64)

    # Columns ordered by descending number of weighings they take part in;
    # ties by column index. Weights are tried in ascending order.
    participation = np.count_nonzero(matrix.entries, axis=0) if k else np.zeros(n)
    order = sorted(range(n), key=lambda j: (-participation[j], j))

    # Per-row bookkeeping for interval pruning: partial sum of assigned
    # columns plus counts of still-unassigned +1 / -1 columns.
    partial = np.zeros(k, dtype=np.int64)
    plus_left = np.count_nonzero(entries == 1, axis=1) if k else np.zeros(0, int)
    minus_left = np.count_nonzero(entries == -1, axis=1) if k else np.zeros(0, int)

    avail = [True] * (n + 1)  # weight -> still unassigned
    assigned: list[int] = []  # weights in `order` position order
    nodes = 0

    def row_feasible() -> bool:
        # Remaining weights sorted ascending, with prefix sums for the
        # cheapest/most expensive completions per row.
        rem = [w for w in range(1, n + 1) if avail[w]]
        m = len(rem)
        pref = [0]
        for w in rem:
            pref.append(pref[-1] + w)
        total = pref[m]
        for i in range(k):
            p, q = int(plus_left[i]), int(minus_left[i])
            # relaxation: rows optimized independently, weights may repeat
            # across rows but never within one row
            hi = partial[i] + (total - pref[m - p]) - pref[q]
            lo = partial[i] + pref[p] - (total - pref[m - q])
            t = target[i]
            if t > 0 and hi <= 0:
                return False
            if t < 0 and lo >= 0:
                return False
            if t == 0 and (hi < 0 or lo > 0):
                return False
        return True

    def search(pos: int, deviated: bool) -> CoinAssignment | None:
        nonlocal nodes
        if pos == n:
            if not deviated:
                return None
            w = np.empty(n, dtype=np.int64)
            for p, weight in enumerate(assigned):
                w[order[p]] = weight
            return CoinAssignment(w)
        j = order[pos]
        col = entries[:, j] if k else None
        for weight in range(1, n + 1):
            if not avail[weight]:
                continue
            nodes += 1
            if nodes > budget.max_nodes:
                raise BudgetExceededError(nodes)
            avail[weight] = False
            assigned.append(weight)
            if k:
                partial[:] += col * weight
                plus_left[:] -= col == 1
                minus_left[:] -= col == -1
            ok = row_feasible() if k else True
            if ok:
                found = search(pos + 1, deviated or weight != j + 1)
                if found is not None:
                    if k:
                        partial[:] -= col * weight
                        plus_left[:] += col == 1
                        minus_left[:] += col == -1
                    assigned.pop()
                    avail[weight] = True
                    return found
            if k:
                partial[:] -= col * weight
                plus_left[:] += col == 1
                minus_left[:] += col == -1
            assigned.pop()
            avail[weight] = True
        return None

    witness = search(0, False)
    if witness is None:
        return VerificationResult(unique=True, outcome=outcome)
    return _check_witness(matrix, witness, outcome)
