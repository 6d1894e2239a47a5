"""Balance-scale verification designs and the minimum-weighings sequence.

Given n coins claimed to weigh 1..n grams, a k x n matrix over {-1,0,+1}
encodes k balance-scale weighings.  The design is conclusive when the
identity labeling is the only bijection reproducing the observed outcome
signs; B(n) (OEIS A186313) is the least such k.  This package verifies
designs, computes B(n) exactly at small n, and evaluates the exact
exclusion bounds that rule out k = ceil(log3 n) for n close to 3^k.
"""

from .bounds import (
    BoundReport,
    bound_report,
    chain_construction,
    excluded,
    lower_bound,
    trivial_lower,
)
from .core import (
    CoinAssignment,
    DimensionError,
    MatrixFormatError,
    RowPermutation,
    SignVector,
    VerificationResult,
    WeighingMatrix,
    apply_row_permutation,
    identity_assignment,
    parse_matrix,
    permute_assignment,
    serialize_matrix,
    weigh,
)
from .proofkit import (
    AuditResult,
    ColumnSet,
    StabilizerDescription,
    audit_injectivity,
    counterexample_full,
    f_image,
    full_matrix,
    stabilizer,
)
from .solve import (
    BaronResult,
    Minimality,
    SearchOutcome,
    SearchStatus,
    SolveConfig,
    baron,
    exists_munchhausen,
    format_bfile,
    sequence,
)
from .verify import (
    BudgetExceededError,
    VerifyBudget,
    verify_fast,
    verify_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "AuditResult",
    "BaronResult",
    "BoundReport",
    "BudgetExceededError",
    "CoinAssignment",
    "ColumnSet",
    "DimensionError",
    "MatrixFormatError",
    "Minimality",
    "RowPermutation",
    "SearchOutcome",
    "SearchStatus",
    "SignVector",
    "SolveConfig",
    "StabilizerDescription",
    "VerificationResult",
    "VerifyBudget",
    "WeighingMatrix",
    "apply_row_permutation",
    "audit_injectivity",
    "baron",
    "bound_report",
    "chain_construction",
    "counterexample_full",
    "excluded",
    "exists_munchhausen",
    "f_image",
    "format_bfile",
    "full_matrix",
    "identity_assignment",
    "lower_bound",
    "parse_matrix",
    "permute_assignment",
    "sequence",
    "serialize_matrix",
    "stabilizer",
    "trivial_lower",
    "verify_fast",
    "verify_oracle",
    "weigh",
]
