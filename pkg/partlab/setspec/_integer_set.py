import enum
from bisect import bisect_right
from itertools import count, takewhile
from typing import Annotated, Iterator, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from partlab.util.exceptions import SetSemanticsError


class SetKind(enum.Enum):
    PARTS = "parts"
    MULTS = "mults"


class _IntegerSet(BaseModel):
    """Common behaviour of every set variant.

    Elements always enumerate ascending without duplicates, so counting and
    truncation can stop at the first element above the bound.
    """

    model_config = ConfigDict(frozen=True)

    def iter_elements(self) -> Iterator[int]:
        raise NotImplementedError

    def count_upto(self, bound: int) -> int:
        return sum(1 for _ in self._takeupto(bound))

    def elements_upto(self, bound: int) -> list[int]:
        return list(self._takeupto(bound))

    def _takeupto(self, bound: int) -> Iterator[int]:
        return takewhile(lambda element: element <= bound, self.iter_elements())


class Finite(_IntegerSet):
    kind: Literal["finite"] = "finite"
    elements: tuple[int, ...]

    @model_validator(mode="after")
    def _check_elements(self) -> "Finite":
        if not self.elements:
            raise SetSemanticsError("Finite set must not be empty")
        if any(element < 0 for element in self.elements):
            raise SetSemanticsError("Finite set elements must be nonnegative")
        if list(self.elements) != sorted(set(self.elements)):
            raise SetSemanticsError(
                "Finite set elements must be strictly increasing"
            )
        return self

    def iter_elements(self) -> Iterator[int]:
        return iter(self.elements)

    def count_upto(self, bound: int) -> int:
        return bisect_right(self.elements, bound)


class AllFrom(_IntegerSet):
    kind: Literal["all-from"] = "all-from"
    start: int = 1

    @model_validator(mode="after")
    def _check_start(self) -> "AllFrom":
        if self.start < 1:
            raise SetSemanticsError("all-from start must be a positive integer")
        return self

    def iter_elements(self) -> Iterator[int]:
        return count(self.start)

    def count_upto(self, bound: int) -> int:
        return max(0, bound - self.start + 1)


class ArithmeticProgression(_IntegerSet):
    kind: Literal["ap"] = "ap"
    first: int
    step: int

    @model_validator(mode="after")
    def _check_terms(self) -> "ArithmeticProgression":
        if self.first < 1 or self.step < 1:
            raise SetSemanticsError(
                "Arithmetic progression needs a positive first term and step"
            )
        return self

    def iter_elements(self) -> Iterator[int]:
        return count(self.first, self.step)

    def count_upto(self, bound: int) -> int:
        if bound < self.first:
            return 0
        return (bound - self.first) // self.step + 1


class Powers(_IntegerSet):
    kind: Literal["pow"] = "pow"
    base: int

    @model_validator(mode="after")
    def _check_base(self) -> "Powers":
        if self.base < 2:
            raise SetSemanticsError("Base must be at least 2")
        return self

    def iter_elements(self) -> Iterator[int]:
        value = 1
        while True:
            yield value
            value *= self.base


class DoublyExponential(_IntegerSet):
    kind: Literal["dexp"] = "dexp"
    base: int

    @model_validator(mode="after")
    def _check_base(self) -> "DoublyExponential":
        if self.base < 2:
            raise SetSemanticsError("Base must be at least 2")
        return self

    def iter_elements(self) -> Iterator[int]:
        # base^(base^(j+1)) == (base^(base^j))^base
        value = self.base
        while True:
            yield value
            value **= self.base


class SparseConstructed(_IntegerSet):
    kind: Literal["sparse"] = "sparse"
    anchors: tuple[int, ...]
    source: str | None = None

    @model_validator(mode="after")
    def _check_anchors(self) -> "SparseConstructed":
        if not self.anchors:
            raise SetSemanticsError("Sparse set needs at least one anchor")
        if self.anchors[0] < 1:
            raise SetSemanticsError("Sparse anchors must be positive")
        if any(b <= a for a, b in zip(self.anchors, self.anchors[1:])):
            raise SetSemanticsError("Sparse anchors must be strictly increasing")
        return self

    def iter_elements(self) -> Iterator[int]:
        return iter(self.anchors)

    def count_upto(self, bound: int) -> int:
        return bisect_right(self.anchors, bound)


PositiveSet = Annotated[
    Finite
    | AllFrom
    | ArithmeticProgression
    | Powers
    | DoublyExponential
    | SparseConstructed,
    Field(discriminator="kind"),
]


class WithZero(_IntegerSet):
    kind: Literal["zero"] = "zero"
    inner: PositiveSet

    @model_validator(mode="after")
    def _check_inner(self) -> "WithZero":
        if isinstance(self.inner, Finite) and 0 in self.inner.elements:
            raise SetSemanticsError("zero| applied to a set that already has 0")
        return self

    def iter_elements(self) -> Iterator[int]:
        yield 0
        yield from self.inner.iter_elements()

    def count_upto(self, bound: int) -> int:
        if bound < 0:
            return 0
        return 1 + self.inner.count_upto(bound)


IntegerSetSpec = (
    Finite
    | AllFrom
    | ArithmeticProgression
    | Powers
    | DoublyExponential
    | SparseConstructed
    | WithZero
)

NATURALS = WithZero(inner=AllFrom(start=1))


def validate_kind(spec: IntegerSetSpec, kind: SetKind) -> IntegerSetSpec:
    """Enforce the part-set / multiplicity-set rules on an already built spec."""
    if kind is SetKind.PARTS:
        if isinstance(spec, WithZero) or (
            isinstance(spec, Finite) and 0 in spec.elements
        ):
            raise SetSemanticsError("Part set must not contain 0")
    elif not contains_zero(spec):
        raise SetSemanticsError("Multiplicity set must contain 0")
    return spec


def contains_zero(spec: IntegerSetSpec) -> bool:
    return isinstance(spec, WithZero) or (
        isinstance(spec, Finite) and spec.elements[0] == 0
    )


def is_naturals(spec: IntegerSetSpec) -> bool:
    return spec == NATURALS


def is_all_positive(spec: IntegerSetSpec) -> bool:
    return isinstance(spec, AllFrom) and spec.start == 1
