import math

import pytest

from partlab.arith import (
    FiniteCoprimeSet,
    as_finite_coprime_set,
    coprime_prefix,
    gcd_of_set,
    is_eventually_positive,
    scale_down,
)
from partlab.setspec import (
    AllFrom,
    ArithmeticProgression,
    DoublyExponential,
    Finite,
    Powers,
    SparseConstructed,
    WithZero,
)
from partlab.util.exceptions import NotCoprimeError, SetSemanticsError


class TestGcdOfSet:
    """Test cases for the structural gcd."""

    def test_examples(self):
        """Test the gcd of finite and structured sets."""
        assert gcd_of_set(Finite(elements=(6, 10, 15))) == 1
        assert gcd_of_set(ArithmeticProgression(first=4, step=6)) == 2
        assert gcd_of_set(DoublyExponential(base=2)) == 2

    def test_unbounded_variants(self):
        """Test the gcd of sets given by a rule."""
        assert gcd_of_set(AllFrom(start=5)) == 1
        assert gcd_of_set(Powers(base=6)) == 1
        assert gcd_of_set(SparseConstructed(anchors=(16, 256, 65536))) == 16

    @pytest.mark.parametrize(
        "spec",
        [
            ArithmeticProgression(first=6, step=9),
            DoublyExponential(base=6),
            AllFrom(start=3),
            WithZero(inner=ArithmeticProgression(first=4, step=10)),
        ],
    )
    def test_matches_a_long_prefix(self, spec):
        """The structural gcd equals the gcd of the elements up to 10^5."""
        elements = [e for e in spec.elements_upto(10**5) if e > 0]
        assert gcd_of_set(spec) == math.gcd(*elements)


class TestCoprimePrefix:
    """Test cases for the shortest coprime initial segment."""

    def test_three_generators(self):
        """Test that {6, 10, 15} needs all three elements."""
        prefix, trace = coprime_prefix(Finite(elements=(6, 10, 15)))
        assert prefix.elements == (6, 10, 15)
        assert trace.gcds == (6, 2, 1)
        assert trace.prefix_length == 3

    def test_all_positive(self):
        """Test that 1 alone is a coprime prefix."""
        prefix, trace = coprime_prefix(AllFrom(start=1))
        assert prefix.elements == (1,)
        assert trace.gcds == (1,)

    def test_shorter_prefixes_are_not_coprime(self):
        """Every strictly shorter prefix has gcd above 1."""
        _, trace = coprime_prefix(ArithmeticProgression(first=6, step=35))
        assert trace.gcds[-1] == 1
        assert all(g > 1 for g in trace.gcds[:-1])
        assert list(trace.gcds) == sorted(trace.gcds, reverse=True)

    def test_no_coprime_subset(self):
        """Test a progression with no coprime subset."""
        with pytest.raises(NotCoprimeError):
            coprime_prefix(ArithmeticProgression(first=4, step=6))


class TestEventualPositivity:
    """Test cases for the gcd-1 positivity criterion."""

    def test_examples(self):
        """Test the gcd-1 criterion on a few sets."""
        assert is_eventually_positive(Finite(elements=(3, 5)))
        assert not is_eventually_positive(DoublyExponential(base=2))
        assert is_eventually_positive(ArithmeticProgression(first=3, step=7))


class TestFiniteCoprimeSet:
    """Test cases for the coprime set type."""

    def test_not_coprime(self):
        """Test that a common factor is rejected."""
        with pytest.raises(NotCoprimeError):
            FiniteCoprimeSet((4, 6))

    def test_must_be_positive(self):
        """Test that 0 is rejected."""
        with pytest.raises(SetSemanticsError):
            FiniteCoprimeSet((0, 1))

    def test_as_finite_coprime_set(self):
        """Test conversion from a set spec."""
        assert as_finite_coprime_set(Finite(elements=(2, 3))) == FiniteCoprimeSet((2, 3))
        assert as_finite_coprime_set(Finite(elements=(4, 6))) is None
        assert as_finite_coprime_set(AllFrom(start=1)) is None


class TestScaleDown:
    """Test cases for dividing a set by a common factor."""

    def test_scalable_variants(self):
        """Test scaling a finite set and a progression."""
        assert scale_down(Finite(elements=(4, 6, 10)), 2) == Finite(elements=(2, 3, 5))
        assert scale_down(ArithmeticProgression(first=4, step=6), 2) == ArithmeticProgression(
            first=2, step=3
        )

    def test_unscalable_variant(self):
        """Test that doubly exponential sets do not scale."""
        assert scale_down(DoublyExponential(base=2), 2) is None

    def test_factor_must_divide(self):
        """Test that the factor must divide every element."""
        with pytest.raises(SetSemanticsError):
            scale_down(Finite(elements=(4, 6)), 3)
