from .inequalities import (
    B2Bounds,
    CanonicalChain,
    b2_bounds,
    canonical_chain,
    chain_threshold,
    require_hypotheses,
    separating_bound,
    signature_upper_bound,
    torelli_separating_bound,
)
from .report import BoundEntry, BoundInputs, BoundReport, Verdict, check

__all__ = [
    "B2Bounds",
    "BoundEntry",
    "BoundInputs",
    "BoundReport",
    "CanonicalChain",
    "Verdict",
    "b2_bounds",
    "canonical_chain",
    "chain_threshold",
    "check",
    "require_hypotheses",
    "separating_bound",
    "signature_upper_bound",
    "torelli_separating_bound",
]
