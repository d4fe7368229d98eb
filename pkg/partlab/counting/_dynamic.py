import logging

from partlab.arith import FiniteCoprimeSet
from partlab.counting._count_table import BigCount, CountTable
from partlab.setspec import (
    NATURALS,
    IntegerSetSpec,
    SetKind,
    is_naturals,
    validate_kind,
)
from partlab.util.exceptions import InvalidInputError

logger = logging.getLogger(__name__)

LARGE_TABLE = 100_000


def count_table(upto: int, parts: IntegerSetSpec, mults: IntegerSetSpec) -> CountTable:
    """p(v; parts, mults) for every 0 <= v <= upto in one pass over the parts.

    One rolling array is kept. For each part a the layer becomes
    T[v] = sum over m in mults with m*a <= v of T_prev[v - m*a].
    """
    validate_kind(parts, SetKind.PARTS)
    validate_kind(mults, SetKind.MULTS)
    if upto < 0:
        raise InvalidInputError("Table bound must be nonnegative")

    part_list = parts.elements_upto(upto)
    if upto >= LARGE_TABLE:
        logger.info(f"Building table to {upto} over {len(part_list)} parts")

    values: list[int] = [1] + [0] * upto
    if is_naturals(mults):
        for a in part_list:
            for v in range(a, upto + 1):
                values[v] += values[v - a]
    else:
        for a in part_list:
            previous = values[:]
            for m in mults.iter_elements():
                if m == 0:
                    continue
                shift = m * a
                if shift > upto:
                    break
                values[shift:] = [
                    current + earlier
                    for current, earlier in zip(values[shift:], previous)
                ]
    return CountTable(parts=parts, mults=mults, values=tuple(values))


def count_partitions(n: int, parts: IntegerSetSpec, mults: IntegerSetSpec) -> BigCount:
    return count_table(n, parts, mults)[n]


def cumulative_count(n: int, coprime: FiniteCoprimeSet) -> BigCount:
    """r'(n; A) = sum of p(j; A) over 0 <= j <= n, all multiplicities allowed."""
    return sum(count_table(n, coprime.as_spec(), NATURALS).values)
