# Counting context: exact p(n; S, M) tables and independent oracles
from partlab.counting._brute_force import (
    BRUTE_FORCE_LIMIT,
    brute_force_count,
    enumerate_partitions,
)
from partlab.counting._count_table import BigCount, CountTable
from partlab.counting._dynamic import count_partitions, count_table, cumulative_count
from partlab.counting._pentagonal import euler_pentagonal_table

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "BigCount",
    "CountTable",
    "brute_force_count",
    "count_partitions",
    "count_table",
    "cumulative_count",
    "enumerate_partitions",
    "euler_pentagonal_table",
]
