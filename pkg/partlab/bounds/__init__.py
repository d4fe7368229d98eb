# Bounds context: evaluators for every bound and asymptotic, plus verdicts
from partlab.bounds._asymptotic import (
    classical_refined_comparison,
    classical_sqrt_lower,
    debruijn_leading_term,
    debruijn_upper_bound,
    harmonic_chain_bound,
    harmonic_number,
    hrr_leading_term,
    slow_growth_closed_form,
)
from partlab.bounds._high_precision import (
    Direction,
    HighPrecisionReal,
    Verdict,
    check_bound,
)
from partlab.bounds._polynomial import (
    j_of_n,
    padberg_lower,
    refined_lower_bound,
    schur_asymptotic,
    schur_style_point_lower,
)
from partlab.bounds._product import (
    ExistenceWitness,
    check_existence_lower_bound,
    monotone_lower_bound,
    product_upper_bound,
)
from partlab.bounds._report import (
    BOUND_IDS,
    SLOW_GROWTH_MULTS,
    SLOW_GROWTH_PARTS,
    SLOW_GROWTH_SLACK,
    BoundEntry,
    BoundReport,
    build_bound_report,
    build_bound_reports,
)

__all__ = [
    "BOUND_IDS",
    "SLOW_GROWTH_MULTS",
    "SLOW_GROWTH_PARTS",
    "SLOW_GROWTH_SLACK",
    "BoundEntry",
    "BoundReport",
    "Direction",
    "ExistenceWitness",
    "HighPrecisionReal",
    "Verdict",
    "build_bound_report",
    "build_bound_reports",
    "check_bound",
    "check_existence_lower_bound",
    "classical_refined_comparison",
    "classical_sqrt_lower",
    "debruijn_leading_term",
    "debruijn_upper_bound",
    "harmonic_chain_bound",
    "harmonic_number",
    "hrr_leading_term",
    "j_of_n",
    "monotone_lower_bound",
    "padberg_lower",
    "product_upper_bound",
    "refined_lower_bound",
    "schur_asymptotic",
    "schur_style_point_lower",
    "slow_growth_closed_form",
]
