import logging
import math

from partlab.arith._coprime_set import FiniteCoprimeSet, PrefixGcdTrace
from partlab.setspec import (
    AllFrom,
    ArithmeticProgression,
    DoublyExponential,
    Finite,
    IntegerSetSpec,
    Powers,
    SparseConstructed,
    WithZero,
)
from partlab.util.exceptions import NotCoprimeError, SetSemanticsError

logger = logging.getLogger(__name__)


def gcd_of_set(spec: IntegerSetSpec) -> int:
    """gcd of every element, read off the structure of the set."""
    match spec:
        case Finite(elements=elements) | SparseConstructed(anchors=elements):
            return math.gcd(*elements)
        case AllFrom() | Powers():
            return 1
        case ArithmeticProgression(first=first, step=step):
            return math.gcd(first, step)
        case DoublyExponential(base=base):
            # every later element is a power of the first one
            return math.gcd(base, base**base)
        case WithZero(inner=inner):
            return gcd_of_set(inner)
    raise TypeError(f"Not a set spec: {spec!r}")


def coprime_prefix(spec: IntegerSetSpec) -> tuple[FiniteCoprimeSet, PrefixGcdTrace]:
    """Shortest initial segment a_1..a_i0 of the set whose gcd is 1."""
    g = gcd_of_set(spec)
    if g != 1:
        raise NotCoprimeError(f"Set has gcd {g}, so no subset of it is coprime")

    prefix: list[int] = []
    gcds: list[int] = []
    running = 0
    for element in spec.iter_elements():
        running = math.gcd(running, element)
        prefix.append(element)
        gcds.append(running)
        if running == 1:
            break
    logger.debug(f"Coprime prefix {prefix} with gcd trace {gcds}")
    return FiniteCoprimeSet(tuple(prefix)), PrefixGcdTrace(len(prefix), tuple(gcds))


def is_eventually_positive(spec: IntegerSetSpec) -> bool:
    return gcd_of_set(spec) == 1


def as_finite_coprime_set(spec: IntegerSetSpec) -> FiniteCoprimeSet | None:
    """The set itself as a FiniteCoprimeSet, when it is finite with gcd 1."""
    match spec:
        case Finite(elements=elements) | SparseConstructed(anchors=elements):
            if math.gcd(*elements) == 1:
                return FiniteCoprimeSet(elements)
    return None


def scale_down(spec: IntegerSetSpec, g: int) -> IntegerSetSpec | None:
    """S/g for a set whose elements are all multiples of g, when S/g is expressible."""
    if gcd_of_set(spec) % g:
        raise SetSemanticsError(f"{g} does not divide every element")
    match spec:
        case Finite(elements=elements):
            return Finite(elements=tuple(e // g for e in elements))
        case ArithmeticProgression(first=first, step=step):
            return ArithmeticProgression(first=first // g, step=step // g)
        case SparseConstructed(anchors=anchors):
            return SparseConstructed(anchors=tuple(a // g for a in anchors))
    return None
