from dataclasses import dataclass
from functools import cache

from partlab.arith import FiniteCoprimeSet
from partlab.setspec import (
    IntegerSetSpec,
    SetKind,
    format_set_spec,
    is_naturals,
    parse_set_spec,
)

# (parts, mults) pairs covering every set variant, including the
# doubly exponential parts/multiplicities pair
CORPUS_SPECS = (
    ("all", "nat"),
    ("finite:3,5", "nat"),
    ("finite:2,3", "nat"),
    ("finite:6,10,15", "nat"),
    ("finite:1,2,3", "nat"),
    ("finite:3,4,5", "nat"),
    ("pow:2", "nat"),
    ("dexp:2", "zero|dexp:2"),
    ("dexp:3", "nat"),
    ("ap:3,7", "nat"),
    ("ap:4,6", "nat"),
    ("all-from:2", "nat"),
    ("sparse:2,5,11", "nat"),
    ("all", "zero|pow:2"),
    ("all", "finite:0,1"),
    ("all", "finite:0,2,5"),
    ("finite:1,3,4", "zero|ap:2,3"),
    ("pow:3", "zero|dexp:2"),
    ("all-from:3", "zero|all-from:2"),
    ("finite:4,6,10", "nat"),
)

# (smaller, larger) pairs in which either the parts or the multiplicities grow
CONTAINMENT_SPECS = (
    (("finite:2,3", "nat"), ("finite:1,2,3", "nat")),
    (("finite:1,2,3", "nat"), ("all", "nat")),
    (("finite:3,4,5", "nat"), ("all-from:3", "nat")),
    (("all-from:3", "nat"), ("all-from:2", "nat")),
    (("dexp:2", "nat"), ("pow:2", "nat")),
    (("pow:2", "nat"), ("all", "nat")),
    (("all", "finite:0,1"), ("all", "finite:0,1,2")),
    (("all", "finite:0,2"), ("all", "finite:0,2,5")),
    (("all", "finite:0,2,5"), ("all", "nat")),
    (("dexp:2", "zero|dexp:2"), ("dexp:2", "zero|pow:2")),
    (("dexp:2", "zero|pow:2"), ("dexp:2", "nat")),
)

COPRIME_SPECS = (
    (1,),
    (2, 3),
    (2, 5),
    (3, 5),
    (1, 2, 3),
    (3, 4, 5),
    (3, 5, 7),
    (6, 10, 15),
    (2, 5, 11),
    (4, 6, 9, 11),
)


@dataclass(frozen=True)
class CorpusEntry:
    parts: IntegerSetSpec
    mults: IntegerSetSpec

    @property
    def label(self) -> str:
        return f"{format_set_spec(self.parts)} / {format_set_spec(self.mults)}"

    @property
    def unrestricted(self) -> bool:
        return is_naturals(self.mults)

    def inputs(self, **extra) -> dict:
        return {
            "parts": format_set_spec(self.parts),
            "mults": format_set_spec(self.mults),
            **extra,
        }


def _entry(parts: str, mults: str) -> CorpusEntry:
    return CorpusEntry(
        parse_set_spec(parts, SetKind.PARTS), parse_set_spec(mults, SetKind.MULTS)
    )


@cache
def corpus() -> tuple[CorpusEntry, ...]:
    return tuple(_entry(parts, mults) for parts, mults in CORPUS_SPECS)


@cache
def containment_pairs() -> tuple[tuple[CorpusEntry, CorpusEntry], ...]:
    return tuple((_entry(*smaller), _entry(*larger)) for smaller, larger in CONTAINMENT_SPECS)


def coprime_corpus() -> tuple[FiniteCoprimeSet, ...]:
    return tuple(FiniteCoprimeSet(elements) for elements in COPRIME_SPECS)
