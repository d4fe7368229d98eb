from typing import Iterator

from partlab.counting._count_table import BigCount
from partlab.setspec import IntegerSetSpec, SetKind, validate_kind
from partlab.util.exceptions import InvalidInputError

BRUTE_FORCE_LIMIT = 40


def enumerate_partitions(
    n: int, parts: IntegerSetSpec, mults: IntegerSetSpec
) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield each admissible partition of n as ((part, multiplicity), ...)."""
    part_list = parts.elements_upto(n)
    mult_list = [m for m in mults.elements_upto(n) if m > 0]

    def extend(index: int, remaining: int, chosen: tuple) -> Iterator[tuple]:
        if remaining == 0:
            yield chosen
            return
        if index == len(part_list) or part_list[index] > remaining:
            return
        a = part_list[index]
        yield from extend(index + 1, remaining, chosen)
        for m in mult_list:
            if m * a > remaining:
                break
            yield from extend(index + 1, remaining - m * a, chosen + ((a, m),))

    yield from extend(0, n, ())


def brute_force_count(n: int, parts: IntegerSetSpec, mults: IntegerSetSpec) -> BigCount:
    """Count by listing every partition; shares nothing with the table builder."""
    if n < 0 or n > BRUTE_FORCE_LIMIT:
        raise InvalidInputError(
            f"Brute force is limited to 0 <= n <= {BRUTE_FORCE_LIMIT}, got {n}"
        )
    validate_kind(parts, SetKind.PARTS)
    validate_kind(mults, SetKind.MULTS)
    return sum(1 for _ in enumerate_partitions(n, parts, mults))
