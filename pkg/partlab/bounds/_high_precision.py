import enum
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from partlab.infra import settings

# Extra digits carried beyond the working precision during evaluation
GUARD_DIGITS = 10


class Direction(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"


class Verdict(enum.Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class HighPrecisionReal:
    """A real evaluated at `precision` decimal digits, with an outward enclosure."""

    value: mpmath.mpf
    precision: int

    def enclosure(self) -> tuple[mpmath.mpf, mpmath.mpf]:
        with mpmath.workdps(self.precision + GUARD_DIGITS):
            slack = abs(self.value) * mpmath.mpf(10) ** -self.precision
            return self.value - slack, self.value + slack

    def floor_lower(self) -> int:
        lower, _ = self.enclosure()
        with mpmath.workdps(self.precision + GUARD_DIGITS):
            return int(mpmath.floor(lower))

    def floor_upper(self) -> int:
        _, upper = self.enclosure()
        with mpmath.workdps(self.precision + GUARD_DIGITS):
            return int(mpmath.floor(upper))

    def ceil_lower(self) -> int:
        lower, _ = self.enclosure()
        with mpmath.workdps(self.precision + GUARD_DIGITS):
            return int(mpmath.ceil(lower))

    def ceil_upper(self) -> int:
        _, upper = self.enclosure()
        with mpmath.workdps(self.precision + GUARD_DIGITS):
            return int(mpmath.ceil(upper))

    def exp(self) -> "HighPrecisionReal":
        with mpmath.workdps(self.precision + GUARD_DIGITS):
            return HighPrecisionReal(mpmath.exp(self.value), self.precision)

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return mpmath.nstr(self.value, 20, strip_zeros=False)


def resolve_precision(precision: int | None) -> int:
    return settings.DEFAULT_PRECISION if precision is None else precision


def evaluate(precision: int | None, compute) -> HighPrecisionReal:
    """Run `compute()` under the working precision and wrap the result."""
    digits = resolve_precision(precision)
    with mpmath.workdps(digits + GUARD_DIGITS):
        return HighPrecisionReal(+compute(), digits)


def check_bound(
    exact: int, bound: "int | Fraction | HighPrecisionReal", direction: Direction
) -> Verdict:
    """Compare an exact count with a bound; a real bound is used only through
    its enclosure, so the verdict cannot flip at higher precision."""
    if isinstance(bound, HighPrecisionReal):
        if direction is Direction.UPPER:
            if exact <= bound.floor_lower():
                return Verdict.SATISFIED
            if exact > bound.floor_upper():
                return Verdict.VIOLATED
        else:
            if exact >= bound.ceil_upper():
                return Verdict.SATISFIED
            if exact < bound.ceil_lower():
                return Verdict.VIOLATED
        return Verdict.UNDECIDED

    holds = exact <= bound if direction is Direction.UPPER else exact >= bound
    return Verdict.SATISFIED if holds else Verdict.VIOLATED
