import math
from dataclasses import dataclass

from partlab.setspec import Finite
from partlab.util.exceptions import NotCoprimeError, SetSemanticsError


@dataclass(frozen=True)
class FiniteCoprimeSet:
    """a_1 < ... < a_k, all positive, with gcd 1."""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise SetSemanticsError("Coprime set must not be empty")
        if self.elements[0] < 1:
            raise SetSemanticsError("Coprime set elements must be positive")
        if any(b <= a for a, b in zip(self.elements, self.elements[1:])):
            raise SetSemanticsError("Coprime set elements must be strictly increasing")
        if math.gcd(*self.elements) != 1:
            raise NotCoprimeError(
                f"gcd of {list(self.elements)} is {math.gcd(*self.elements)}, not 1"
            )

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def product(self) -> int:
        return math.prod(self.elements)

    def as_spec(self) -> Finite:
        return Finite(elements=self.elements)


@dataclass(frozen=True)
class PrefixGcdTrace:
    prefix_length: int
    gcds: tuple[int, ...]
