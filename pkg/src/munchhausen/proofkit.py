"""Row-stabilizer machinery behind the exclusion bound.

The row permutations that preserve a design's outcome signs form a product
of symmetric groups, one factor per equal-sign row class.  Mapping each
such permutation to the column *set* of the row-permuted matrix must be
injective for a conclusive design; a collision yields, constructively, a
non-identity relabeling with the same outcome signs.  The k x 3^k design
using every possible column realizes the collision for k >= 4 (its column
set is closed under any row swap), which certifies B(3^k) > k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

import numpy as np

from .core import (
    CoinAssignment,
    RowPermutation,
    WeighingMatrix,
    apply_row_permutation,
    identity_assignment,
    permute_assignment,
    weigh,
)

FULL_MATRIX_MAX_K = 8
AUDIT_DEFAULT_LIMIT = 10**6


class StabilizerLimitError(RuntimeError):
    """Stabilizer too large to enumerate within the given limit."""


class NoEqualSignRowsError(RuntimeError):
    """All outcome signs distinct; no row swap is available (k <= 3 only)."""


@dataclass(frozen=True)
class StabilizerDescription:
    """Partition of rows by outcome sign, and the exact stabilizer size
    (product of factorials of the class sizes)."""

    sign_classes: tuple[tuple[int, ...], ...]  # by sign -1, 0, +1; empty classes kept
    size: int

    def nonempty_classes(self) -> list[tuple[int, ...]]:
        return [c for c in self.sign_classes if c]


@dataclass(frozen=True)
class ColumnSet:
    """Distinct columns of a design, as sorted base-3 codes."""

    k: int
    codes: tuple[int, ...]

    def __len__(self):
        return len(self.codes)


@dataclass(frozen=True)
class AuditResult:
    injective: bool
    collision: tuple[RowPermutation, RowPermutation] | None = None


def stabilizer(matrix: WeighingMatrix) -> StabilizerDescription:
    outcome = weigh(matrix, identity_assignment(matrix.n))
    classes = tuple(
        tuple(int(i) for i in np.flatnonzero(outcome.signs == s)) for s in (-1, 0, 1)
    )
    size = 1
    for c in classes:
        size *= factorial(len(c))
    return StabilizerDescription(sign_classes=classes, size=size)


def column_set(matrix: WeighingMatrix) -> ColumnSet:
    codes = sorted(set(int(c) for c in matrix.column_codes()))
    return ColumnSet(k=matrix.k, codes=tuple(codes))


def _enumerate_stabilizer(stab: StabilizerDescription, k: int):
    """Yield stabilizer elements as RowPermutations, deterministically:
    lexicographic per class, classes in sign order."""
    classes = stab.nonempty_classes()
    for images in itertools.product(
        *(itertools.permutations(c) for c in classes)
    ):
        image = np.arange(k, dtype=np.int64)
        for cls, img in zip(classes, images):
            for src, dst in zip(cls, img):
                image[src] = dst
        yield RowPermutation(image)


def in_stabilizer(matrix: WeighingMatrix, sigma: RowPermutation) -> bool:
    outcome = weigh(matrix, identity_assignment(matrix.n)).signs
    return bool(np.array_equal(outcome[sigma.image], outcome))


def f_image(matrix: WeighingMatrix, sigma: RowPermutation) -> ColumnSet:
    """Column set of the row-permuted matrix; sigma must preserve the
    outcome signs."""
    if not in_stabilizer(matrix, sigma):
        raise ValueError("row permutation does not preserve the outcome signs")
    return column_set(apply_row_permutation(matrix, sigma))


def audit_injectivity(
    matrix: WeighingMatrix, limit: int = AUDIT_DEFAULT_LIMIT
) -> AuditResult:
    """Enumerate the stabilizer and check the column-set map for collisions.

    A collision certifies the design is inconclusive (the two row
    permutations differ by a non-identity column relabeling with the same
    outcome), so conclusive designs must audit injective.
    """
    stab = stabilizer(matrix)
    if stab.size > limit:
        raise StabilizerLimitError(
            f"stabilizer size {stab.size} exceeds audit limit {limit}"
        )
    seen: dict[tuple[int, ...], RowPermutation] = {}
    for sigma in _enumerate_stabilizer(stab, matrix.k):
        key = f_image(matrix, sigma).codes
        if key in seen:
            return AuditResult(injective=False, collision=(seen[key], sigma))
        seen[key] = sigma
    return AuditResult(injective=True)


def full_matrix(k: int) -> WeighingMatrix:
    """k x 3^k design whose columns are all of {-1,0,+1}^k in ascending
    base-3 order (row 0 most significant)."""
    if not 1 <= k <= FULL_MATRIX_MAX_K:
        raise ValueError(f"k must be in 1..{FULL_MATRIX_MAX_K}")
    n = 3**k
    codes = np.arange(n)
    entries = np.empty((k, n), dtype=np.int8)
    for i in range(k - 1, -1, -1):
        entries[i] = codes % 3 - 1
        codes = codes // 3
    return WeighingMatrix(entries)


def counterexample_full(k: int) -> CoinAssignment:
    """Non-identity labeling of the full k x 3^k design with the same
    outcome signs as the identity (k >= 4 always; smaller k only when two
    rows share an outcome sign).

    Construction: swap the lexicographically first pair of equal-sign rows;
    the full column set is closed under that coordinate swap, so relabeling
    each coin by its coordinate-swapped column reproduces every outcome.
    """
    matrix = full_matrix(k)
    outcome = weigh(matrix, identity_assignment(matrix.n))
    pair = None
    for i1, i2 in itertools.combinations(range(k), 2):
        if outcome.signs[i1] == outcome.signs[i2]:
            pair = (i1, i2)
            break
    if pair is None:
        raise NoEqualSignRowsError(f"all {k} outcome signs distinct")
    i1, i2 = pair
    # coin with column code c maps to the coin whose column has digits
    # i1 and i2 exchanged
    n = matrix.n
    p1 = 3 ** (k - 1 - i1)
    p2 = 3 ** (k - 1 - i2)
    codes = np.arange(n)
    d1 = (codes // p1) % 3
    d2 = (codes // p2) % 3
    pi = codes + (d2 - d1) * p1 + (d1 - d2) * p2
    witness = permute_assignment(identity_assignment(n), pi)
    assert not witness.is_identity()
    assert weigh(matrix, witness) == outcome
    return witness
