__all__ = [
    "ClosedFormState",
    "ArbitraryBasisBranch",
    "ExactDistribution",
    "BranchWeight",
    "DiscrepancyReport",
    "MatchVerdict",
    "honest_states",
    "post_measurement_states",
    "cheat_final_state",
    "both_cheat_final_state",
    "arbitrary_basis_final_state",
    "shifted_coefficients",
    "adversary_branches",
    "branch_final_state",
    "exact_outcome_distribution",
    "claimed_distribution",
    "half_claim_deviation",
    "compare",
    "comparison_pairs",
    "comparison_table",
    "simulated_honest_snapshots",
    "ANCILLA_OUTCOMES",
]

from .closed_forms import (
    ArbitraryBasisBranch,
    ClosedFormState,
    arbitrary_basis_final_state,
    both_cheat_final_state,
    cheat_final_state,
    honest_states,
    post_measurement_states,
    shifted_coefficients,
)
from .distribution import (
    ANCILLA_OUTCOMES,
    BranchWeight,
    ExactDistribution,
    adversary_branches,
    branch_final_state,
    claimed_distribution,
    exact_outcome_distribution,
    half_claim_deviation,
)
from .discrepancy import (
    DiscrepancyReport,
    MatchVerdict,
    compare,
    comparison_pairs,
    comparison_table,
    simulated_honest_snapshots,
)
