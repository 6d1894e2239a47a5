"""Core domain types for balance-scale weighing designs.

A weighing design is a k x n matrix over {-1, 0, +1}: row i is one weighing,
column j is one coin.  Entry -1 puts coin j on the left pan, +1 on the right
pan, 0 holds it out.  Coins are claimed to weigh 1..n grams; an assignment
is a bijection from coins to those weights.  The outcome of a weighing is
the sign of the weighted row sum: '+' means the right pan is heavier.

All types here are immutable values (numpy arrays are frozen read-only at
construction) and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Parse-time caps: weighted sums then fit comfortably in int64
# (max |sum| <= n(n+1)/2 < 2**63 for n <= 10**6).
MAX_COINS = 10**6
MAX_WEIGHINGS = 64

MAGIC = "munch v1"

_ENTRY_CHARS = {"-": -1, "0": 0, "+": 1}
_CHAR_OF_ENTRY = {-1: "-", 0: "0", 1: "+"}


class DimensionError(ValueError):
    """Shapes of matrix / assignment / permutation do not line up."""


class MatrixFormatError(ValueError):
    """Malformed matrix file; carries the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class WeighingMatrix:
    """k x n design over {-1, 0, +1}.  k = 0 (empty design) is allowed.

    Duplicate columns are representable; classifying them is the verifier's
    job, not a construction error.
    """

    entries: np.ndarray  # shape (k, n), dtype int8

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=np.int8)
        if a.ndim != 2:
            raise DimensionError("matrix entries must be 2-dimensional")
        if a.shape[1] < 1:
            raise DimensionError("matrix must have at least one column")
        if a.size and not np.isin(a, (-1, 0, 1)).all():
            raise ValueError("matrix entries must be in {-1, 0, +1}")
        object.__setattr__(self, "entries", _frozen(a))

    @property
    def k(self) -> int:
        return self.entries.shape[0]

    @property
    def n(self) -> int:
        return self.entries.shape[1]

    def column_codes(self) -> np.ndarray:
        """Base-3 code of each column, row 0 most significant, digit
        order -1 < 0 < +1.  Codes are unique per distinct column."""
        if self.k == 0:
            return np.zeros(self.n, dtype=np.int64)
        pows = 3 ** np.arange(self.k - 1, -1, -1, dtype=np.int64)
        return (self.entries.astype(np.int64) + 1).T @ pows

    def __eq__(self, other):
        if not isinstance(other, WeighingMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and np.array_equal(
            self.entries, other.entries
        )

    def __hash__(self):
        return hash((self.entries.shape, self.entries.tobytes()))

    def __repr__(self):
        return f"WeighingMatrix(k={self.k}, n={self.n})"


@dataclass(frozen=True, eq=False)
class CoinAssignment:
    """Bijection coin -> weight: weights[j] is the claimed weight of coin j,
    and the weights are exactly a permutation of 1..n."""

    weights: np.ndarray  # shape (n,), dtype int64

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.int64)
        if w.ndim != 1 or w.size < 1:
            raise DimensionError("assignment must be a non-empty 1-d sequence")
        if not np.array_equal(np.sort(w), np.arange(1, w.size + 1)):
            raise ValueError("weights must be a permutation of 1..n")
        object.__setattr__(self, "weights", _frozen(w))

    @property
    def n(self) -> int:
        return self.weights.size

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.weights, np.arange(1, self.n + 1)))

    def __eq__(self, other):
        if not isinstance(other, CoinAssignment):
            return NotImplemented
        return np.array_equal(self.weights, other.weights)

    def __hash__(self):
        return hash(self.weights.tobytes())

    def __repr__(self):
        return f"CoinAssignment({list(self.weights)})"


def identity_assignment(n: int) -> CoinAssignment:
    return CoinAssignment(np.arange(1, n + 1))


@dataclass(frozen=True, eq=False)
class SignVector:
    """Per-weighing outcomes, one of {-1, 0, +1} per row; shown as -/0/+."""

    signs: np.ndarray  # shape (k,), dtype int8

    def __post_init__(self):
        s = np.asarray(self.signs, dtype=np.int8)
        if s.ndim != 1:
            raise DimensionError("sign vector must be 1-dimensional")
        if s.size and not np.isin(s, (-1, 0, 1)).all():
            raise ValueError("signs must be in {-1, 0, +1}")
        object.__setattr__(self, "signs", _frozen(s))

    @property
    def k(self) -> int:
        return self.signs.size

    def render(self) -> str:
        return "".join(_CHAR_OF_ENTRY[int(s)] for s in self.signs)

    def __eq__(self, other):
        if not isinstance(other, SignVector):
            return NotImplemented
        return np.array_equal(self.signs, other.signs)

    def __hash__(self):
        return hash(self.signs.tobytes())

    def __repr__(self):
        return f"SignVector({self.render()!r})"


@dataclass(frozen=True, eq=False)
class RowPermutation:
    """Bijection on row indices 0..k-1; applying it to a matrix puts
    row image[i] of the input at row i of the output."""

    image: np.ndarray  # shape (k,), dtype int64, 0-based

    def __post_init__(self):
        p = np.asarray(self.image, dtype=np.int64)
        if p.ndim != 1:
            raise DimensionError("row permutation must be 1-dimensional")
        if not np.array_equal(np.sort(p), np.arange(p.size)):
            raise ValueError("row permutation must be a bijection on 0..k-1")
        object.__setattr__(self, "image", _frozen(p))

    @property
    def k(self) -> int:
        return self.image.size

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.image, np.arange(self.k)))

    def __eq__(self, other):
        if not isinstance(other, RowPermutation):
            return NotImplemented
        return np.array_equal(self.image, other.image)

    def __hash__(self):
        return hash(self.image.tobytes())

    def __repr__(self):
        return f"RowPermutation({list(self.image)})"


@dataclass(frozen=True)
class VerificationResult:
    """unique: the identity labeling is the only one matching the outcome.
    Otherwise a non-identity witness with the same sign vector is attached."""

    unique: bool
    outcome: SignVector
    witness: CoinAssignment | None = field(default=None)

    @property
    def verdict(self) -> str:
        return "unique" if self.unique else "ambiguous"


def weigh(matrix: WeighingMatrix, assignment: CoinAssignment) -> SignVector:
    """Outcome signs of every weighing under the given coin labeling.

    Exact integer arithmetic; row i yields sign(sum_j entries[i][j] *
    weights[j]).
    """
    if assignment.n != matrix.n:
        raise DimensionError(
            f"assignment length {assignment.n} != column count {matrix.n}"
        )
    if matrix.k == 0:
        return SignVector(np.zeros(0, dtype=np.int8))
    sums = matrix.entries.astype(np.int64) @ assignment.weights
    return SignVector(np.sign(sums).astype(np.int8))


def apply_row_permutation(matrix: WeighingMatrix, sigma: RowPermutation) -> WeighingMatrix:
    if sigma.k != matrix.k:
        raise DimensionError(f"permutation length {sigma.k} != row count {matrix.k}")
    return WeighingMatrix(matrix.entries[sigma.image])


def permute_assignment(assignment: CoinAssignment, pi: np.ndarray) -> CoinAssignment:
    """Move coin j's weight to coin pi[j]; satisfies
    permute(permute(a, p1), p2) = permute(a, p2 o p1)."""
    pi = np.asarray(pi, dtype=np.int64)
    if pi.shape != (assignment.n,):
        raise DimensionError("permutation length does not match assignment")
    if not np.array_equal(np.sort(pi), np.arange(assignment.n)):
        raise ValueError("pi must be a bijection on 0..n-1")
    out = np.empty(assignment.n, dtype=np.int64)
    out[pi] = assignment.weights
    return CoinAssignment(out)


def serialize_matrix(matrix: WeighingMatrix) -> str:
    """Canonical text form; see parse_matrix for the format."""
    lines = [MAGIC, f"{matrix.k} {matrix.n}"]
    for i in range(matrix.k):
        lines.append("".join(_CHAR_OF_ENTRY[int(e)] for e in matrix.entries[i]))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str | bytes) -> WeighingMatrix:
    """Parse the matrix file format:

        line 1: ``munch v1``
        line 2: ``<k> <n>``
        lines 3..k+2: exactly n characters from {-,0,+}

    UTF-8, LF line endings, trailing newline required.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MatrixFormatError(1, f"not valid UTF-8: {exc}") from None
    if not text.endswith("\n"):
        raise MatrixFormatError(max(1, text.count("\n") + 1), "missing trailing newline")
    lines = text.split("\n")[:-1]
    if len(lines) < 1 or lines[0] != MAGIC:
        raise MatrixFormatError(1, f"bad magic line (expected {MAGIC!r})")
    if len(lines) < 2:
        raise MatrixFormatError(2, "missing dimension line")
    parts = lines[1].split(" ")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise MatrixFormatError(2, "dimension line must be '<k> <n>' in decimal")
    k, n = int(parts[0]), int(parts[1])
    if n < 1 or n > MAX_COINS:
        raise MatrixFormatError(2, f"column count {n} outside 1..{MAX_COINS}")
    if k > MAX_WEIGHINGS:
        raise MatrixFormatError(2, f"row count {k} exceeds cap {MAX_WEIGHINGS}")
    if len(lines) != 2 + k:
        raise MatrixFormatError(
            min(len(lines), 2 + k) + 1, f"expected {k} row lines, found {len(lines) - 2}"
        )
    rows = np.zeros((k, n), dtype=np.int8)
    for i, row in enumerate(lines[2:]):
        lineno = i + 3
        if len(row) != n:
            raise MatrixFormatError(lineno, f"row has {len(row)} characters, expected {n}")
        for j, ch in enumerate(row):
            if ch not in _ENTRY_CHARS:
                raise MatrixFormatError(lineno, f"illegal character {ch!r}")
            rows[i, j] = _ENTRY_CHARS[ch]
    return WeighingMatrix(rows)
