from fractions import Fraction

from partlab.setspec._integer_set import IntegerSetSpec
from partlab.setspec._threshold import RationalThreshold
from partlab.util.exceptions import InvalidInputError, SetSemanticsError


def count_leq(spec: IntegerSetSpec, x: "RationalThreshold | Fraction | int") -> int:
    """|{s in spec : s <= x}|, computed without leaving the integers."""
    return spec.count_upto(RationalThreshold.of(x).floor())


def elements_upto(spec: IntegerSetSpec, bound: int) -> list[int]:
    if bound < 0:
        raise InvalidInputError("Bound must be nonnegative")
    return spec.elements_upto(bound)


def min_positive(spec: IntegerSetSpec) -> int:
    for element in spec.iter_elements():
        if element > 0:
            return element
    raise SetSemanticsError("Set has no positive element")


def has_positive(spec: IntegerSetSpec) -> bool:
    return any(element > 0 for element in spec.iter_elements())
