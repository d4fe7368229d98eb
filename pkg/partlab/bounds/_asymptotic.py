"""Transcendental bounds and asymptotic leading terms, evaluated with mpmath."""

from fractions import Fraction

import mpmath

from partlab.bounds._high_precision import HighPrecisionReal, evaluate
from partlab.setspec import IntegerSetSpec, count_leq
from partlab.util.exceptions import InvalidInputError


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidInputError(message)


def hrr_leading_term(n: int, precision: int | None = None) -> HighPrecisionReal:
    """exp(pi * sqrt(2n/3)) / (4n * sqrt(3))."""
    _require(n >= 1, "hrr_leading_term needs n >= 1")
    return evaluate(
        precision,
        lambda: mpmath.exp(mpmath.pi * mpmath.sqrt(mpmath.mpf(2 * n) / 3))
        / (4 * n * mpmath.sqrt(3)),
    )


def debruijn_leading_term(n: int, precision: int | None = None) -> HighPrecisionReal:
    """(log(n / log n))^2 / (2 log 2), the leading term of log p_S(2n) for S = powers of 2."""
    _require(n >= 3, "debruijn_leading_term needs n >= 3")
    return evaluate(
        precision,
        lambda: mpmath.log(n / mpmath.log(n)) ** 2 / (2 * mpmath.log(2)),
    )


def debruijn_upper_bound(n: int, precision: int | None = None) -> HighPrecisionReal:
    """log(2n+1) * log2(2n), an upper bound for log p_S(2n) with S = powers of 2."""
    _require(n >= 1, "debruijn_upper_bound needs n >= 1")
    return evaluate(
        precision,
        lambda: mpmath.log(2 * n + 1) * mpmath.log(2 * n) / mpmath.log(2),
    )


def harmonic_number(n: int) -> Fraction:
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))


def harmonic_chain_bound(
    n: int, parts: IntegerSetSpec, precision: int | None = None
) -> HighPrecisionReal:
    """n^A(n) * e^(H_n), with A(n) the number of parts <= n."""
    _require(n >= 1, "harmonic_chain_bound needs n >= 1")
    exponent = count_leq(parts, n)
    h = harmonic_number(n)
    return evaluate(
        precision,
        lambda: mpmath.mpf(n) ** exponent
        * mpmath.exp(mpmath.mpf(h.numerator) / h.denominator),
    )


def classical_sqrt_lower(n: int, precision: int | None = None) -> HighPrecisionReal:
    """e^sqrt(n) / n."""
    _require(n >= 1, "classical_sqrt_lower needs n >= 1")
    return evaluate(precision, lambda: mpmath.exp(mpmath.sqrt(n)) / n)


def classical_refined_comparison(
    n: int, precision: int | None = None
) -> HighPrecisionReal:
    """e^(2 sqrt n) / (2 pi n^2)."""
    _require(n >= 1, "classical_refined_comparison needs n >= 1")
    return evaluate(
        precision,
        lambda: mpmath.exp(2 * mpmath.sqrt(n)) / (2 * mpmath.pi * mpmath.mpf(n) ** 2),
    )


def slow_growth_closed_form(n: int, precision: int | None = None) -> HighPrecisionReal:
    """(lg n) * (lg lg n)^(lg lg n), base-2 logarithms."""
    _require(n >= 16, "slow_growth_closed_form needs n >= 16")

    def compute():
        lg = mpmath.log(n, 2)
        lglg = mpmath.log(lg, 2)
        return lg * lglg**lglg

    return evaluate(precision, compute)
