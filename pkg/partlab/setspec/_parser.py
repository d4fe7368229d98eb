"""Set-spec mini-language.

    spec := "all" | "all-from:" INT | "finite:" INT ("," INT)* | "ap:" INT "," INT
          | "pow:" INT | "dexp:" INT | "nat" | "zero|" spec
          | "sparse:@" FILEPATH | "sparse:" INT ("," INT)*

The inline ``sparse:`` form is what the printer emits for a constructed set
that was never written to a file.
"""

import logging
import re
from pathlib import Path

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
    validate_kind,
)
from partlab.setspec._sparse import read_anchors
from partlab.util.exceptions import SetSemanticsError, SetSpecSyntaxError

logger = logging.getLogger(__name__)

_INT = re.compile(r"[0-9]+")


class _Parser:
    def __init__(self, text: str) -> None:
        self._text = text
        self._pos = 0

    def parse(self) -> IntegerSetSpec:
        spec = self._spec()
        if self._pos != len(self._text):
            raise SetSpecSyntaxError("Unexpected trailing input", self._pos)
        return spec

    def _spec(self) -> IntegerSetSpec:
        start = self._pos
        if self._accept("zero|"):
            inner = self._spec()
            if isinstance(inner, WithZero):
                raise SetSemanticsError("zero| cannot wrap a set that has 0")
            return WithZero(inner=inner)
        if self._accept("nat"):
            return NATURALS
        if self._accept("all-from:"):
            return AllFrom(start=self._int())
        if self._accept("all"):
            return AllFrom(start=1)
        if self._accept("finite:"):
            return Finite(elements=tuple(sorted(self._int_list())))
        if self._accept("ap:"):
            first = self._int()
            self._expect(",")
            return ArithmeticProgression(first=first, step=self._int())
        if self._accept("pow:"):
            return Powers(base=self._int())
        if self._accept("dexp:"):
            return DoublyExponential(base=self._int())
        if self._accept("sparse:@"):
            return self._sparse_file()
        if self._accept("sparse:"):
            return SparseConstructed(anchors=tuple(self._int_list()))
        raise SetSpecSyntaxError("Unknown set form", start)

    def _sparse_file(self) -> SparseConstructed:
        path = self._text[self._pos :]
        if not path:
            raise SetSpecSyntaxError("Expected a file path", self._pos)
        self._pos = len(self._text)
        return SparseConstructed(anchors=tuple(read_anchors(Path(path))), source=path)

    def _int_list(self) -> list[int]:
        values = [self._int()]
        while self._accept(","):
            values.append(self._int())
        if len(set(values)) != len(values):
            raise SetSemanticsError("Duplicate elements in list")
        return values

    def _int(self) -> int:
        match = _INT.match(self._text, self._pos)
        if match is None:
            raise SetSpecSyntaxError("Expected an integer", self._pos)
        self._pos = match.end()
        return int(match.group())

    def _accept(self, literal: str) -> bool:
        if self._text.startswith(literal, self._pos):
            self._pos += len(literal)
            return True
        return False

    def _expect(self, literal: str) -> None:
        if not self._accept(literal):
            raise SetSpecSyntaxError(f"Expected '{literal}'", self._pos)


def parse_set_spec(text: str, kind: SetKind) -> IntegerSetSpec:
    spec = _Parser(text).parse()
    logger.debug(f"Parsed {kind.value} spec {text!r} as {spec!r}")
    return validate_kind(spec, kind)


def format_set_spec(spec: IntegerSetSpec) -> str:
    """Canonical text for a spec; parse_set_spec reads it back unchanged."""
    match spec:
        case Finite(elements=elements):
            return "finite:" + ",".join(map(str, elements))
        case AllFrom(start=1):
            return "all"
        case AllFrom(start=start):
            return f"all-from:{start}"
        case ArithmeticProgression(first=first, step=step):
            return f"ap:{first},{step}"
        case Powers(base=base):
            return f"pow:{base}"
        case DoublyExponential(base=base):
            return f"dexp:{base}"
        case SparseConstructed(source=str() as source):
            return f"sparse:@{source}"
        case SparseConstructed(anchors=anchors):
            return "sparse:" + ",".join(map(str, anchors))
        case WithZero(inner=AllFrom(start=1)):
            return "nat"
        case WithZero(inner=inner):
            return "zero|" + format_set_spec(inner)
    raise TypeError(f"Not a set spec: {spec!r}")
