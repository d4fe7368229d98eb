import pytest

pytestmark = pytest.mark.integration


class TestExploreCommand:
    """Test cases for `partlab explore`."""

    def test_slow_growth_pair(self, invoke_json):
        """Test the zero pattern of the doubly exponential pair."""
        exit_code, payload = invoke_json(
            "explore", "--parts", "dexp:2", "--mults", "zero|dexp:2", "--upto", "64"
        )
        assert exit_code == 0
        assert set(range(1, 65, 2)) <= set(payload["zeros"])
        assert payload["eventually_positive"] is False

    def test_unrestricted(self, invoke_json):
        """Test the summary for unrestricted partitions."""
        exit_code, payload = invoke_json("explore", "--parts", "all", "--upto", "100")
        assert exit_code == 0
        assert payload["zero_count"] == 0
        assert payload["max_count"] == "190569292"
        assert payload["slope"] is not None

    def test_table(self, invoke):
        """Test the key/value table output."""
        result = invoke("explore", "--parts", "finite:2", "--upto", "10")
        lines = [line.split(maxsplit=1) for line in result.stdout.splitlines()[1:]]
        rows = {cells[0]: cells[1] for cells in lines if len(cells) == 2}
        assert result.exit_code == 0
        assert rows["zeros"] == "1 3 5 7 9"
        assert rows["zero_count"] == "5"
