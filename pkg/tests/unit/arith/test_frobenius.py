import math

import pytest

from partlab.arith import FiniteCoprimeSet, frobenius_number, frobenius_threshold
from partlab.counting import count_table
from partlab.setspec import NATURALS


class TestFrobeniusThreshold:
    """Test cases for the representability threshold."""

    @pytest.mark.parametrize(
        "elements, threshold",
        [((3, 5), 8), ((1,), 0), ((6, 10, 15), 30), ((2, 3), 2), ((4, 6, 9, 11), 8)],
    )
    def test_examples(self, elements, threshold):
        """Test thresholds of small coprime sets."""
        assert frobenius_threshold(FiniteCoprimeSet(elements)) == threshold

    def test_frobenius_number(self):
        """Test that the Frobenius number sits one below the threshold."""
        assert frobenius_number(FiniteCoprimeSet((3, 5))) == 7
        assert frobenius_number(FiniteCoprimeSet((1, 4))) == -1

    def test_two_generator_formula(self):
        """threshold(a, b) = ab - a - b + 1 for every coprime pair below 30."""
        for a in range(1, 31):
            for b in range(a + 1, 31):
                if math.gcd(a, b) == 1:
                    assert frobenius_threshold(FiniteCoprimeSet((a, b))) == a * b - a - b + 1

    @pytest.mark.parametrize("elements", [(3, 5), (6, 10, 15), (3, 4, 5), (5, 7, 11)])
    def test_consistent_with_counts(self, elements):
        """p(threshold - 1) = 0 and p > 0 on [threshold, threshold + 2 max]."""
        coprime = FiniteCoprimeSet(elements)
        threshold = frobenius_threshold(coprime)
        end = threshold + 2 * max(elements)
        table = count_table(end, coprime.as_spec(), NATURALS)
        assert table[threshold - 1] == 0
        assert all(table[n] > 0 for n in range(threshold, end + 1))
