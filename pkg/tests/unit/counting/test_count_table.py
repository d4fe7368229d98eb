import pytest

from partlab.arith import FiniteCoprimeSet
from partlab.counting import (
    CountTable,
    brute_force_count,
    count_partitions,
    count_table,
    cumulative_count,
    euler_pentagonal_table,
)
from partlab.setspec import NATURALS, Finite
from partlab.util.exceptions import InvalidInputError, SetSemanticsError
from partlab.verify import containment_pairs, corpus


class TestCountPartitions:
    """Test cases for the dynamic-programming counter."""

    def test_empty_partition(self, parts_of, mults_of):
        """Test that p(0) = 1 for any sets."""
        assert count_partitions(0, parts_of("finite:7"), mults_of("zero|dexp:2")) == 1

    def test_two_generators(self, parts_of, nat):
        """Test p(8) and p(7) for parts {3, 5}."""
        parts = parts_of("finite:3,5")
        assert count_partitions(8, parts, nat) == 1
        assert count_partitions(7, parts, nat) == 0

    def test_slow_growth_pair(self, parts_of, mults_of):
        """8 = 2*4 = 4*2 with multiplicities from {0, 2, 4, 16, ...}."""
        assert count_partitions(8, parts_of("dexp:2"), mults_of("zero|dexp:2")) == 2

    def test_unrestricted(self, all_parts, nat):
        """Test p(10) and p(100) for unrestricted partitions."""
        assert count_partitions(10, all_parts, nat) == 42
        assert count_partitions(100, all_parts, nat) == 190569292

    def test_negative_n(self, all_parts, nat):
        """Test that a negative n is rejected."""
        with pytest.raises(InvalidInputError):
            count_partitions(-1, all_parts, nat)

    def test_kind_rules_are_enforced(self, nat):
        """Test that 0 in a part set is rejected."""
        with pytest.raises(SetSemanticsError):
            count_partitions(5, Finite(elements=(0, 3)), nat)


class TestCountTable:
    """Test cases for whole tables."""

    def test_two_three(self, parts_of, nat):
        """Test the table for parts {2, 3} up to 6."""
        assert count_table(6, parts_of("finite:2,3"), nat).values == (1, 0, 1, 1, 1, 1, 2)

    def test_slow_growth_prefix(self, parts_of, mults_of):
        """4 = 2*2 only, since multiplicity 1 is not allowed."""
        table = count_table(4, parts_of("dexp:2"), mults_of("zero|dexp:2"))
        assert table.values == (1, 0, 0, 0, 1)

    def test_single_entry(self, all_parts, nat):
        """Test a table that holds only p(0)."""
        table = count_table(0, all_parts, nat)
        assert table.values == (1,)
        assert table.upto == 0

    def test_record_indices(self, parts_of, nat):
        """Test records, monotonicity and zeros of a short table."""
        table = count_table(7, parts_of("finite:2,3"), nat)
        assert table.record_indices() == [0, 2, 3, 4, 5, 6]
        assert not table.is_nondecreasing()
        assert table.zeros() == [1]

    def test_must_start_with_one(self, all_parts, nat):
        """Test that a table must start with p(0) = 1."""
        with pytest.raises(ValueError):
            CountTable(parts=all_parts, mults=nat, values=(0, 1))

    def test_pentagonal_start(self):
        """Test the first values of the pentagonal recurrence."""
        assert euler_pentagonal_table(10) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_matches_pentagonal_recurrence(self, all_parts, nat):
        """Test the table against the pentagonal recurrence up to 500."""
        assert list(count_table(500, all_parts, nat).values) == euler_pentagonal_table(500)


class TestBruteForce:
    """Test cases for the enumeration oracle."""

    def test_examples(self, all_parts, nat, parts_of, mults_of):
        """Test enumeration on a few small cases."""
        assert brute_force_count(4, all_parts, nat) == 5
        assert brute_force_count(2, parts_of("dexp:2"), mults_of("zero|dexp:2")) == 0
        assert brute_force_count(0, parts_of("finite:7"), nat) == 1

    def test_limit(self, all_parts, nat):
        """Test that enumeration stops past n = 40."""
        with pytest.raises(InvalidInputError):
            brute_force_count(41, all_parts, nat)

    def test_agrees_with_tables_on_corpus(self):
        """Every corpus pair matches the oracle for n <= 30."""
        for entry in corpus():
            table = count_table(30, entry.parts, entry.mults)
            for n in range(31):
                assert table[n] == brute_force_count(n, entry.parts, entry.mults), entry.label


class TestSetContainment:
    """Counts never drop when the parts or the multiplicities grow."""

    @pytest.mark.parametrize(
        "smaller, larger", containment_pairs(), ids=lambda entry: entry.label
    )
    def test_larger_sets_count_at_least_as_many(self, smaller, larger):
        """p(n; S, M) <= p(n; S', M') for n <= 200 when S, M sit inside S', M'."""
        low = count_table(200, smaller.parts, smaller.mults)
        high = count_table(200, larger.parts, larger.mults)
        assert all(low[n] <= high[n] for n in range(201))

    def test_chain_of_part_sets(self, parts_of, nat):
        """{2, 3} inside {1, 2, 3} inside all."""
        specs = ("finite:2,3", "finite:1,2,3", "all")
        chain = [count_table(50, parts_of(spec), nat) for spec in specs]
        for n in range(51):
            assert chain[0][n] <= chain[1][n] <= chain[2][n]
        assert (chain[0][7], chain[1][7], chain[2][7]) == (1, 8, 15)

    def test_slow_growth_multiplicities_inside_nat(self, parts_of, mults_of, nat):
        """Test the slow-growth multiplicities against all of N."""
        parts = parts_of("dexp:2")
        restricted = count_table(200, parts, mults_of("zero|dexp:2"))
        free = count_table(200, parts, nat)
        assert all(restricted[n] <= free[n] for n in range(201))
        assert restricted[8] == 2
        assert free[8] == 3


class TestCumulativeCount:
    """Test cases for r'(n; A)."""

    def test_examples(self):
        """Test the cumulative count for {2, 3} and {1}."""
        assert cumulative_count(10, FiniteCoprimeSet((2, 3))) == 14
        assert cumulative_count(0, FiniteCoprimeSet((1,))) == 1
        assert cumulative_count(5, FiniteCoprimeSet((1,))) == 6

    def test_matches_table_cumulative(self):
        """Test that the cumulative count matches the table's prefix sums."""
        coprime = FiniteCoprimeSet((3, 5, 7))
        table = count_table(60, coprime.as_spec(), NATURALS)
        assert table.cumulative()[60] == cumulative_count(60, coprime)
