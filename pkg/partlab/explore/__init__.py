# Explore context: empirical zero-pattern and growth summaries
from partlab.explore._explore import ExploreSummary, explore_table, log_log_slope

__all__ = ["ExploreSummary", "explore_table", "log_log_slope"]
