# Arithmetic context: gcd, coprime prefixes, Frobenius thresholds, monotonicity
from partlab.arith._analysis import AnalyzeResponse, analyze_parts
from partlab.arith._coprime_set import FiniteCoprimeSet, PrefixGcdTrace
from partlab.arith._frobenius import frobenius_number, frobenius_threshold
from partlab.arith._gcd import (
    as_finite_coprime_set,
    coprime_prefix,
    gcd_of_set,
    is_eventually_positive,
    scale_down,
)
from partlab.arith._monotonicity import (
    EMPIRICAL_WINDOW_END,
    blocking_element,
    empirical_window_start,
    eventually_strictly_increasing,
    first_non_increase,
    last_decrease,
)

__all__ = [
    "EMPIRICAL_WINDOW_END",
    "AnalyzeResponse",
    "FiniteCoprimeSet",
    "PrefixGcdTrace",
    "analyze_parts",
    "as_finite_coprime_set",
    "blocking_element",
    "coprime_prefix",
    "empirical_window_start",
    "eventually_strictly_increasing",
    "first_non_increase",
    "frobenius_number",
    "frobenius_threshold",
    "gcd_of_set",
    "is_eventually_positive",
    "last_decrease",
    "scale_down",
]
