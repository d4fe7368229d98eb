from dataclasses import dataclass
from itertools import accumulate

from partlab.setspec import IntegerSetSpec

# Partition counts are plain Python ints: exact and unbounded
BigCount = int


@dataclass(frozen=True)
class CountTable:
    """p(0..N; parts, mults), immutable once built."""

    parts: IntegerSetSpec
    mults: IntegerSetSpec
    values: tuple[BigCount, ...]

    def __post_init__(self) -> None:
        if not self.values or self.values[0] != 1:
            raise ValueError("A count table starts with p(0) = 1")

    @property
    def upto(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> BigCount:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def is_nondecreasing(self) -> bool:
        return all(b >= a for a, b in zip(self.values, self.values[1:]))

    def record_indices(self) -> list[int]:
        """Every n with p(n) = max(p(0..n))."""
        records = []
        best = -1
        for n, value in enumerate(self.values):
            if value >= best:
                records.append(n)
                best = value
        return records

    def cumulative(self) -> list[BigCount]:
        return list(accumulate(self.values))

    def zeros(self) -> list[int]:
        return [n for n, value in enumerate(self.values) if value == 0]
