"""Exact rational bounds: Schur, Padberg and the j(n)-optimised lower bound."""

import math
from fractions import Fraction
from itertools import islice

from partlab.arith import FiniteCoprimeSet, gcd_of_set
from partlab.setspec import IntegerSetSpec
from partlab.util.exceptions import InvalidInputError, NotCoprimeError


def schur_asymptotic(n: int, coprime: FiniteCoprimeSet) -> Fraction:
    """n^(k-1) / ((k-1)! a_1 ... a_k)."""
    k = coprime.k
    return Fraction(n ** (k - 1), math.factorial(k - 1) * coprime.product)


def padberg_lower(n: int, coprime: FiniteCoprimeSet) -> Fraction:
    """(n+1)^k / (k! a_1 ... a_k), a lower bound for the cumulative count."""
    k = coprime.k
    return Fraction((n + 1) ** k, math.factorial(k) * coprime.product)


def schur_style_point_lower(n: int, coprime: FiniteCoprimeSet) -> Fraction:
    """(n+1)^(k-1) / (k! a_1 ... a_k); holds at record indices of p(.; A)."""
    k = coprime.k
    return Fraction((n + 1) ** (k - 1), math.factorial(k) * coprime.product)


def j_of_n(n: int, parts: IntegerSetSpec) -> int:
    """Least j >= 1 with j * a_j >= n."""
    if n < 1:
        raise InvalidInputError("j_of_n needs n >= 1")
    for j, a in enumerate(parts.iter_elements(), start=1):
        if j * a >= n:
            return j
    raise InvalidInputError(f"Finite part set is exhausted before j*a_j >= {n}")


def refined_lower_bound(n: int, parts: IntegerSetSpec) -> Fraction:
    """(n+1)^(j-1) / (j! a_1 ... a_j) with j = j(n)."""
    g = gcd_of_set(parts)
    if g != 1:
        raise NotCoprimeError(f"Refined lower bound needs gcd 1, got {g}")
    j = j_of_n(n, parts)
    prefix = list(islice(parts.iter_elements(), j))
    return Fraction((n + 1) ** (j - 1), math.factorial(j) * math.prod(prefix))
