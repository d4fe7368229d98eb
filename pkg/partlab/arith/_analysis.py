from pydantic import BaseModel

from partlab.arith._frobenius import frobenius_number, frobenius_threshold
from partlab.arith._gcd import as_finite_coprime_set, coprime_prefix, gcd_of_set
from partlab.arith._monotonicity import blocking_element
from partlab.setspec import IntegerSetSpec, format_set_spec


class AnalyzeResponse(BaseModel):
    parts: str
    gcd: int
    eventually_positive: bool
    coprime_prefix: list[int] | None = None
    prefix_gcds: list[int] | None = None
    positive_from: int | None = None
    frobenius_threshold: int | None = None
    frobenius_number: int | None = None
    strictly_increasing: bool | None = None
    blocking_element: int | None = None


def analyze_parts(parts: IntegerSetSpec) -> AnalyzeResponse:
    """Arithmetic facts about a part set with unrestricted multiplicities.

    positive_from is the threshold of the coprime prefix, past which p(n) > 0.
    The Frobenius threshold and number and the monotonicity criterion are
    reported only when the set itself is finite with gcd 1.
    """
    g = gcd_of_set(parts)
    response = AnalyzeResponse(parts=format_set_spec(parts), gcd=g, eventually_positive=g == 1)
    if g != 1:
        return response

    prefix, trace = coprime_prefix(parts)
    response.coprime_prefix = list(prefix.elements)
    response.prefix_gcds = list(trace.gcds)
    response.positive_from = frobenius_threshold(prefix)

    finite = as_finite_coprime_set(parts)
    if finite is not None:
        response.frobenius_threshold = frobenius_threshold(finite)
        response.frobenius_number = frobenius_number(finite)
        response.blocking_element = blocking_element(finite)
        response.strictly_increasing = response.blocking_element is None
    return response
