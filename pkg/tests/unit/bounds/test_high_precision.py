from fractions import Fraction

import mpmath

from partlab.bounds import (
    Direction,
    HighPrecisionReal,
    Verdict,
    check_bound,
    debruijn_upper_bound,
    harmonic_chain_bound,
    hrr_leading_term,
)
from partlab.setspec import Powers


class TestCheckBound:
    """Test cases for comparing exact counts with bounds."""

    def test_exact_rational_bounds(self):
        """Test exact verdicts for integer and rational bounds."""
        assert check_bound(5, Fraction(5, 4), Direction.LOWER) is Verdict.SATISFIED
        assert check_bound(1, Fraction(5, 4), Direction.LOWER) is Verdict.VIOLATED
        assert check_bound(60, 60, Direction.UPPER) is Verdict.SATISFIED
        assert check_bound(61, 60, Direction.UPPER) is Verdict.VIOLATED

    def test_real_bound_far_from_count(self):
        """Test that a real bound far from the count is decided."""
        bound = HighPrecisionReal(mpmath.mpf("220.26"), 50)
        assert check_bound(190569292, bound, Direction.LOWER) is Verdict.SATISFIED
        assert check_bound(100, bound, Direction.LOWER) is Verdict.VIOLATED
        assert check_bound(221, bound, Direction.UPPER) is Verdict.VIOLATED

    def test_real_bound_at_an_integer_is_undecided(self):
        """An enclosure straddling the count gives no verdict."""
        with mpmath.workdps(60):
            bound = HighPrecisionReal(mpmath.mpf(7), 50)
        assert check_bound(7, bound, Direction.UPPER) is Verdict.UNDECIDED
        assert check_bound(7, bound, Direction.LOWER) is Verdict.UNDECIDED

    def test_enclosure_contains_value(self):
        """Test that the enclosure straddles the value."""
        value = hrr_leading_term(100, 50)
        lower, upper = value.enclosure()
        assert lower < value.value < upper
        assert value.floor_lower() <= value.floor_upper()
        assert value.ceil_lower() <= value.ceil_upper()


class TestPrecision:
    """Test cases for working precision."""

    def test_precision_is_carried(self):
        """Test that the requested precision is recorded."""
        assert hrr_leading_term(100, 30).precision == 30

    def test_higher_precision_agrees(self):
        """50 and 100 digits agree to 40 significant digits."""
        low = hrr_leading_term(100, 50)
        high = hrr_leading_term(100, 100)
        assert mpmath.nstr(low.value, 40) == mpmath.nstr(high.value, 40)

    def test_printing_uses_twenty_digits(self):
        """Test the printed form of a real."""
        text = str(HighPrecisionReal(mpmath.mpf(2), 50))
        assert text == "2.0000000000000000000"


class TestMinimumPrecision:
    """Verdicts at the lowest precision the command line accepts."""

    def test_enclosure_is_tight(self):
        """The half-width is |v| * 10^-precision, not a whole multiple of v."""
        value = debruijn_upper_bound(8, precision=10).exp()
        lower, upper = value.enclosure()
        assert lower > 0
        assert (upper - lower) / value.value < mpmath.mpf(10) ** -9

    def test_far_bounds_are_decided(self):
        """b(16) = 36 sits far below both upper bounds."""
        debruijn = debruijn_upper_bound(8, precision=10).exp()
        chain = harmonic_chain_bound(16, Powers(base=2), precision=10)
        assert check_bound(36, debruijn, Direction.UPPER) is Verdict.SATISFIED
        assert check_bound(36, chain, Direction.UPPER) is Verdict.SATISFIED
        assert check_bound(10**9, chain, Direction.UPPER) is Verdict.VIOLATED

    def test_large_values_floor_exactly(self):
        """Floors of values past 2^53 are taken at the working precision."""
        with mpmath.workdps(40):
            bound = HighPrecisionReal(mpmath.mpf(10) ** 25 + mpmath.mpf("0.5"), 30)
        assert bound.floor_lower() == 10**25
        assert bound.ceil_upper() == 10**25 + 1
        assert check_bound(10**25, bound, Direction.UPPER) is Verdict.SATISFIED
