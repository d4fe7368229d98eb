import pytest

from partlab.bounds import (
    BOUND_IDS,
    SLOW_GROWTH_MULTS,
    SLOW_GROWTH_PARTS,
    build_bound_report,
    build_bound_reports,
)
from partlab.util.exceptions import InvalidInputError


def _entries(report):
    return {entry.bound_id: entry for entry in report.entries}


class TestBuildBoundReport:
    """Test cases for single-n reports."""

    def test_all_positive_parts(self, all_parts, nat):
        """Test a full report for p(10) = 42."""
        report = build_bound_report(10, all_parts, nat)
        entries = _entries(report)
        assert report.exact == 42
        assert list(entries) == list(BOUND_IDS)
        assert entries["product_upper"].verdict == "satisfied"
        assert entries["debruijn_upper"].applicable is False
        assert entries["schur_point"].applicable is False
        assert all(entry.verdict != "violated" for entry in report.entries)

    def test_exact_values_are_rendered(self, all_parts, nat):
        """Test that rational values print as fractions."""
        entry = _entries(build_bound_report(4, all_parts, nat))["refined"]
        assert entry.value == "5/4"
        assert entry.precision is None
        assert entry.satisfied is True

    def test_real_values_carry_precision(self, all_parts, nat):
        """Test that real values carry their precision."""
        entry = _entries(build_bound_report(100, all_parts, nat, precision=30))["sqrt_lower"]
        assert entry.value.startswith("220.26")
        assert entry.precision == 30

    def test_binary_partitions(self, parts_of, nat):
        """debruijn_upper bounds log p(2m) at m = 4, and b(8) = 10 is far below exp(6.59)."""
        report = build_bound_report(8, parts_of("pow:2"), nat, bound_ids=("debruijn_upper",))
        (entry,) = report.entries
        assert report.exact == 10
        assert entry.value.startswith("6.591")
        assert entry.verdict == "satisfied"

    def test_slow_growth_pair(self):
        """Test the slow-growth bound at its first n."""
        report = build_bound_report(
            16, SLOW_GROWTH_PARTS, SLOW_GROWTH_MULTS, bound_ids=("slow_growth",)
        )
        (entry,) = report.entries
        assert entry.applicable
        assert entry.verdict == "satisfied"

    def test_unknown_bound_id(self, all_parts, nat):
        """Test that an unknown bound id is an input error."""
        with pytest.raises(InvalidInputError):
            build_bound_report(10, all_parts, nat, bound_ids=("nosuch",))

    def test_json_keeps_counts_exact(self, all_parts, nat):
        """Test that the exact count serializes as a string."""
        data = build_bound_report(100, all_parts, nat).model_dump(mode="json")
        assert data["exact"] == "190569292"

    def test_existence_compares_the_best_count_up_to_n_squared(self, all_parts, nat):
        """At n = 4 the threshold is 60/17 and p(16) = 231 is the largest count seen."""
        entry = _entries(build_bound_report(4, all_parts, nat))["existence"]
        assert entry.value == "60/17"
        assert entry.observed == 231
        assert entry.verdict == "satisfied"

    def test_existence_stops_past_sixty(self, all_parts, nat):
        """Test that the existence entry is not applicable past n = 60."""
        report = build_bound_report(61, all_parts, nat, bound_ids=("existence",))
        assert report.entries[0].applicable is False
        assert report.entries[0].observed is None


class TestBuildBoundReports:
    """Test cases for whole ranges of n."""

    def test_schur_point_only_at_records(self, parts_of, nat):
        """Test that the point bound applies at record indices only."""
        reports = build_bound_reports(6, parts_of("finite:2,3"), nat, bound_ids=("schur_point",))
        applicable = [report.n for report in reports if report.entries[0].applicable]
        assert len(reports) == 7
        assert applicable == [0, 2, 3, 4, 5, 6]

    def test_existence_over_a_range(self, parts_of, nat):
        """Every n in [1, 12] has some r <= n^2 above the threshold."""
        parts = parts_of("finite:2,3")
        reports = build_bound_reports(12, parts, nat, bound_ids=("existence",))
        assert reports[0].entries[0].applicable is False
        assert all(report.entries[0].verdict == "satisfied" for report in reports[1:])

    def test_matches_single_reports(self, all_parts, nat):
        """Test that a range report equals the single report at the same n."""
        reports = build_bound_reports(20, all_parts, nat)
        assert reports[15] == build_bound_report(15, all_parts, nat)

    def test_unknown_bound_id(self, all_parts, nat):
        """Test that one unknown id rejects the whole request."""
        with pytest.raises(InvalidInputError):
            build_bound_reports(5, all_parts, nat, bound_ids=("product_upper", "nosuch"))
