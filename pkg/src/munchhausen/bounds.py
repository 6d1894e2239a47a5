"""Exact finite bounds on the minimum number of weighings.

Lower bounds:

* trivial: fewer than ceil(log3 n) weighings leave two coins in identical
  roles throughout, so their weights can be swapped undetected.
* exclusion: a conclusive k x n design has distinct columns drawn from the
  3^k possible ones, and the set of admissible column sets must be at
  least as large as the group of outcome-preserving row permutations,
  which has size at least (ceil(k/3))! by pigeonhole over the three
  outcome signs.  When C(3^k, n) < (ceil(k/3))! no design exists.

Upper bound: the chain design (weigh coin i against coin i+1 for all i)
proves any labeling in n-1 weighings.

All arithmetic is exact (Python integers); no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

import numpy as np

from .core import WeighingMatrix

MAX_REPORT_K = 256
_LMIN_SCAN_CAP = 10**6


def trivial_lower(n: int) -> int:
    """ceil(log3 n) by exact integer powering."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k, p = 0, 1
    while p < n:
        k += 1
        p *= 3
    return k


def chain_construction(n: int) -> WeighingMatrix:
    """(n-1) x n design weighing coin i against coin i+1; all outcomes '+'
    under the true weights, and the forced strict ascent pins the identity."""
    if n < 1:
        raise ValueError("n must be >= 1")
    entries = np.zeros((max(n - 1, 0), n), dtype=np.int8)
    for i in range(n - 1):
        entries[i, i] = -1
        entries[i, i + 1] = 1
    return WeighingMatrix(entries)


def _r_floor(k: int) -> int:
    return factorial(-(-k // 3))


def excluded(n: int, k: int) -> bool:
    """True iff C(3^k, n) < (ceil(k/3))!, certifying that no conclusive
    k x n design exists (so B(n) > k)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    universe = 3**k
    if n > universe:
        return True
    return comb(universe, min(n, universe - n)) < _r_floor(k)


@dataclass(frozen=True)
class BoundReport:
    """Exact exclusion data at a given k.

    c_cap(n) = C(3^k, n) caps the number of admissible column sets; r_floor
    floors the row-stabilizer size; l_min is the smallest l = 3^k - n at
    which the cap reaches the floor.  The n in (3^k - l_min, 3^k] are
    excluded; n_lb counts those that also satisfy ceil(log3 n) = k.
    """

    k: int
    r_floor: int
    l_min: int
    n_lb: int

    @property
    def excluded_range(self) -> range:
        # n values ruled out at this k (may be empty)
        return range(3**self.k - self.l_min + 1, 3**self.k + 1)


def bound_report(k: int) -> BoundReport:
    if not 0 <= k <= MAX_REPORT_K:
        raise ValueError(f"k must be in 0..{MAX_REPORT_K}")
    universe = 3**k
    r = _r_floor(k)
    l, binom = 0, 1  # binom = C(3^k, l), updated incrementally
    while binom < r:
        l += 1
        if l > _LMIN_SCAN_CAP or l > universe:
            raise RuntimeError(f"l_min scan cap exceeded at k={k}")
        binom = binom * (universe - l + 1) // l
    band = universe - universe // 3  # count of n with ceil(log3 n) = k
    return BoundReport(k=k, r_floor=r, l_min=l, n_lb=min(l, band))


def lower_bound(n: int) -> int:
    """Best exact lower bound on B(n): the trivial bound, plus one when the
    exclusion inequality rules that k out."""
    k = trivial_lower(n)
    return k + 1 if excluded(n, k) else k
