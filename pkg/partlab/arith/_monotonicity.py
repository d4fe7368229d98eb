import math
from collections.abc import Sequence

from partlab.arith._coprime_set import FiniteCoprimeSet
from partlab.arith._frobenius import frobenius_threshold

EMPIRICAL_WINDOW_END = 2000


def _gcd_without(elements: tuple[int, ...], index: int) -> int:
    # gcd of the empty set is 0, never 1
    return math.gcd(*(elements[:index] + elements[index + 1 :]))


def eventually_strictly_increasing(coprime: FiniteCoprimeSet) -> bool:
    """True iff every (k-1)-subset of the set is coprime."""
    return blocking_element(coprime) is None


def blocking_element(coprime: FiniteCoprimeSet) -> int | None:
    """First element whose removal leaves a gcd above 1, if any."""
    for index, element in enumerate(coprime.elements):
        if _gcd_without(coprime.elements, index) != 1:
            return element
    return None


def empirical_window_start(coprime: FiniteCoprimeSet) -> int:
    return frobenius_threshold(coprime) + max(coprime.elements) ** 2


def first_non_increase(values: Sequence[int], start: int, end: int) -> int | None:
    """First n in [start, end] with values[n] - values[n-1] <= 0."""
    for n in range(max(start, 1), end + 1):
        if values[n] <= values[n - 1]:
            return n
    return None


def last_decrease(values: Sequence[int]) -> int | None:
    """Last n with values[n] < values[n-1]."""
    for n in range(len(values) - 1, 0, -1):
        if values[n] < values[n - 1]:
            return n
    return None
