"""Zero pattern and growth summary of one count table.

Nothing here decides a growth class; the numbers are reported as observed.
"""

import logging
import math

import numpy as np
from pydantic import BaseModel

from partlab.arith import gcd_of_set, last_decrease
from partlab.counting import CountTable
from partlab.infra.output import DecimalCount
from partlab.setspec import format_set_spec, is_naturals

logger = logging.getLogger(__name__)

# zeros beyond this many are counted but not listed
ZERO_LIST_LIMIT = 1000


class ExploreSummary(BaseModel):
    parts: str
    mults: str
    upto: int
    zero_count: int
    zeros: list[int]
    max_count: DecimalCount
    max_count_at: int
    eventually_positive: bool | None = None
    last_decrease: int | None = None
    slope: str | None = None
    slope_from: int | None = None


def log_log_slope(table: CountTable, start: int) -> float | None:
    """Least-squares slope of log p(n) against log n over positive p(n), n >= start."""
    support = [n for n in range(max(start, 2), table.upto + 1) if table[n] > 0]
    if len(support) < 2:
        return None
    xs = np.log(np.array(support, dtype=float))
    # counts outgrow float64, so logs are taken on the exact ints
    ys = np.array([math.log(table[n]) for n in support])
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def _eventually_positive(table: CountTable) -> bool | None:
    # gcd 1 settles positivity only when every multiplicity is allowed
    if gcd_of_set(table.parts) != 1:
        return False
    return True if is_naturals(table.mults) else None


def explore_table(table: CountTable) -> ExploreSummary:
    zeros = table.zeros()
    max_count = max(table.values)
    slope_from = table.upto // 2
    slope = log_log_slope(table, slope_from)
    logger.debug(f"Explored table to {table.upto}: {len(zeros)} zeros, slope {slope}")
    return ExploreSummary(
        parts=format_set_spec(table.parts),
        mults=format_set_spec(table.mults),
        upto=table.upto,
        zero_count=len(zeros),
        zeros=zeros[:ZERO_LIST_LIMIT],
        max_count=max_count,
        max_count_at=table.values.index(max_count),
        eventually_positive=_eventually_positive(table),
        last_decrease=last_decrease(table.values),
        slope=None if slope is None else f"{slope:.6f}",
        slope_from=None if slope is None else slope_from,
    )
