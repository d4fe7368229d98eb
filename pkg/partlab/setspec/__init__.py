# Set-spec context: integer sets for parts and multiplicities
from partlab.setspec._counting_function import (
    count_leq,
    elements_upto,
    has_positive,
    min_positive,
)
from partlab.setspec._integer_set import (
    NATURALS,
    AllFrom,
    ArithmeticProgression,
    DoublyExponential,
    Finite,
    IntegerSetSpec,
    Powers,
    SetKind,
    SparseConstructed,
    WithZero,
    contains_zero,
    is_all_positive,
    is_naturals,
    validate_kind,
)
from partlab.setspec._parser import format_set_spec, parse_set_spec
from partlab.setspec._sparse import (
    EpsilonTable,
    construct_sparse_set,
    guarantee_violations,
    read_anchors,
    read_epsilon_table,
    write_anchors,
)
from partlab.setspec._threshold import RationalThreshold

__all__ = [
    "NATURALS",
    "AllFrom",
    "ArithmeticProgression",
    "DoublyExponential",
    "EpsilonTable",
    "Finite",
    "IntegerSetSpec",
    "Powers",
    "RationalThreshold",
    "SetKind",
    "SparseConstructed",
    "WithZero",
    "construct_sparse_set",
    "contains_zero",
    "count_leq",
    "elements_upto",
    "format_set_spec",
    "guarantee_violations",
    "has_positive",
    "is_all_positive",
    "is_naturals",
    "min_positive",
    "parse_set_spec",
    "read_anchors",
    "read_epsilon_table",
    "validate_kind",
    "write_anchors",
]
