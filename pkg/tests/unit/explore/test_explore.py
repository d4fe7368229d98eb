from partlab.counting import count_table
from partlab.explore import explore_table, log_log_slope


class TestExploreTable:
    """Test cases for the zero pattern and growth summary."""

    def test_slow_growth_pair_vanishes_at_odd_n(self, parts_of, mults_of):
        """Test that the doubly exponential pair vanishes at every odd n."""
        table = count_table(1024, parts_of("dexp:2"), mults_of("zero|dexp:2"))
        summary = explore_table(table)
        assert set(range(1, 1025, 2)) <= set(summary.zeros)
        assert summary.zero_count == len(summary.zeros)
        assert summary.eventually_positive is False

    def test_unrestricted_partitions(self, all_parts, nat):
        """Test the summary for unrestricted partitions up to 100."""
        summary = explore_table(count_table(100, all_parts, nat))
        assert summary.zero_count == 0
        assert summary.max_count == 190569292
        assert summary.max_count_at == 100
        assert summary.last_decrease is None
        assert summary.eventually_positive is True
        assert float(summary.slope) > 1
        assert summary.slope_from == 50

    def test_single_even_part(self, parts_of, nat):
        """Test the zeros of the single part 2."""
        summary = explore_table(count_table(10, parts_of("finite:2"), nat))
        assert summary.zeros == [1, 3, 5, 7, 9]
        assert summary.eventually_positive is False

    def test_restricted_multiplicities_are_undecided(self, all_parts, mults_of):
        """Test that positivity is left open for restricted multiplicities."""
        summary = explore_table(count_table(20, all_parts, mults_of("finite:0,1")))
        assert summary.eventually_positive is None

    def test_last_decrease(self, parts_of, nat):
        """p(19) = 3 < p(18) = 4 for parts {2, 3}."""
        summary = explore_table(count_table(20, parts_of("finite:2,3"), nat))
        assert summary.last_decrease == 19

    def test_counts_serialize_as_strings(self, all_parts, nat):
        """Test that counts serialize as strings."""
        data = explore_table(count_table(100, all_parts, nat)).model_dump(mode="json")
        assert data["max_count"] == "190569292"
        assert data["parts"] == "all"
        assert data["mults"] == "nat"


class TestLogLogSlope:
    """Test cases for the regression slope."""

    def test_polynomial_growth(self, parts_of, nat):
        """p(n; {1, 2}) = floor(n/2) + 1 grows like n^1."""
        table = count_table(4000, parts_of("finite:1,2"), nat)
        assert abs(log_log_slope(table, 2000) - 1) < 0.05

    def test_too_few_points(self, parts_of, nat):
        """Test that fewer than two positive points give no slope."""
        table = count_table(3, parts_of("finite:7"), nat)
        assert log_log_slope(table, 0) is None
