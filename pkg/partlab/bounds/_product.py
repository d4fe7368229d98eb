"""Bounds built from the counting function of the multiplicity set."""

import math
from dataclasses import dataclass
from fractions import Fraction

from partlab.counting import BigCount, CountTable, count_table
from partlab.setspec import (
    IntegerSetSpec,
    count_leq,
    has_positive,
    min_positive,
)
from partlab.util.exceptions import InvalidInputError


@dataclass(frozen=True)
class ExistenceWitness:
    threshold: Fraction
    r: int | None
    witness: BigCount | None

    @property
    def found(self) -> bool:
        return self.r is not None


def _truncated_product(limit: int, parts: IntegerSetSpec, mults: IntegerSetSpec) -> int:
    # prod over parts a of M(limit / a); the factor is 1 once a * min_positive(M) > limit
    if not has_positive(mults):
        return 1
    smallest = min_positive(mults)
    return math.prod(
        count_leq(mults, Fraction(limit, a))
        for a in parts.elements_upto(limit // smallest)
    )


def product_upper_bound(n: int, parts: IntegerSetSpec, mults: IntegerSetSpec) -> int:
    """prod over a in S of M(n/a)."""
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    return _truncated_product(n, parts, mults)


def check_existence_lower_bound(
    n: int,
    parts: IntegerSetSpec,
    mults: IntegerSetSpec,
    table: CountTable | None = None,
) -> ExistenceWitness:
    """Smallest r <= n^2 with p(r) >= prod M(n/a) / (n^2 + 1).

    `table` may be any table for the same sets reaching at least n^2.
    """
    if n < 1:
        raise InvalidInputError("n must be positive")
    square = n * n
    threshold = Fraction(product_upper_bound(n, parts, mults), square + 1)
    if table is None or table.upto < square:
        table = count_table(square, parts, mults)
    for r in range(square + 1):
        if table[r] >= threshold:
            return ExistenceWitness(threshold=threshold, r=r, witness=table[r])
    return ExistenceWitness(threshold=threshold, r=None, witness=None)


def monotone_lower_bound(n: int, parts: IntegerSetSpec, mults: IntegerSetSpec) -> Fraction:
    """(1/(n+1)) prod over a of |{mu in M : mu * a <= sqrt(n)}|.

    For integers, mu * a <= sqrt(n) exactly when mu * a <= isqrt(n).
    """
    if n < 1:
        raise InvalidInputError("n must be positive")
    return Fraction(_truncated_product(math.isqrt(n), parts, mults), n + 1)
