import logging
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Callable, Literal

from pydantic import BaseModel

from partlab.arith import FiniteCoprimeSet, as_finite_coprime_set, gcd_of_set
from partlab.bounds._asymptotic import (
    classical_refined_comparison,
    classical_sqrt_lower,
    debruijn_upper_bound,
    harmonic_chain_bound,
    slow_growth_closed_form,
)
from partlab.bounds._high_precision import (
    Direction,
    HighPrecisionReal,
    Verdict,
    check_bound,
    resolve_precision,
)
from partlab.bounds._polynomial import refined_lower_bound, schur_style_point_lower
from partlab.bounds._product import (
    check_existence_lower_bound,
    monotone_lower_bound,
    product_upper_bound,
)
from partlab.counting import CountTable, count_table
from partlab.infra.output import DecimalCount, render_value
from partlab.setspec import (
    DoublyExponential,
    IntegerSetSpec,
    Powers,
    WithZero,
    is_all_positive,
    is_naturals,
)
from partlab.util.exceptions import InvalidInputError

logger = logging.getLogger(__name__)

SLOW_GROWTH_SLACK = 4
SLOW_GROWTH_PARTS = DoublyExponential(base=2)
SLOW_GROWTH_MULTS = WithZero(inner=DoublyExponential(base=2))
# the existence entry tabulates to n^2, so it stops here
EXISTENCE_MAX_N = 60

Bound = int | Fraction | HighPrecisionReal


@dataclass
class BoundContext:
    """Everything a bound needs at one n: the sets, a table reaching n, precision."""

    parts: IntegerSetSpec
    mults: IntegerSetSpec
    table: CountTable
    precision: int
    extended: CountTable | None = field(default=None, repr=False)

    @cached_property
    def coprime(self) -> FiniteCoprimeSet | None:
        return as_finite_coprime_set(self.parts)

    @cached_property
    def record_indices(self) -> set[int]:
        return set(self.table.record_indices())

    @cached_property
    def parts_gcd(self) -> int:
        return gcd_of_set(self.parts)

    @cached_property
    def first_decrease(self) -> int | None:
        values = self.table.values
        return next(
            (i for i in range(1, len(values)) if values[i] < values[i - 1]), None
        )

    def nondecreasing_upto(self, n: int) -> bool:
        return self.first_decrease is None or self.first_decrease > n

    @property
    def classical(self) -> bool:
        return is_all_positive(self.parts) and is_naturals(self.mults)

    def table_reaching(self, upto: int) -> CountTable:
        if self.table.upto >= upto:
            return self.table
        if self.extended is None or self.extended.upto < upto:
            self.extended = count_table(upto, self.parts, self.mults)
        return self.extended


@dataclass(frozen=True)
class BoundDefinition:
    bound_id: str
    direction: Direction
    applies: Callable[[int, BoundContext], bool]
    value: Callable[[int, BoundContext], Bound]
    # debruijn_upper bounds log p, so its value is exponentiated before comparing
    log_scale: bool = False
    # compared against this instead of p(n) when set
    observed: Callable[[int, BoundContext], int] | None = None


def _refined_applies(n: int, ctx: BoundContext) -> bool:
    if n < 1 or not is_naturals(ctx.mults) or ctx.parts_gcd != 1:
        return False
    try:
        refined_lower_bound(n, ctx.parts)
    except InvalidInputError:
        return False
    return True


def _best_upto_square(n: int, ctx: BoundContext) -> int:
    table = ctx.table_reaching(n * n)
    return max(table.values[: n * n + 1])


BOUNDS: dict[str, BoundDefinition] = {
    definition.bound_id: definition
    for definition in (
        BoundDefinition(
            "product_upper",
            Direction.UPPER,
            lambda n, ctx: True,
            lambda n, ctx: product_upper_bound(n, ctx.parts, ctx.mults),
        ),
        BoundDefinition(
            "monotone_lower",
            Direction.LOWER,
            lambda n, ctx: n >= 1 and ctx.nondecreasing_upto(n),
            lambda n, ctx: monotone_lower_bound(n, ctx.parts, ctx.mults),
        ),
        BoundDefinition(
            "existence",
            Direction.LOWER,
            lambda n, ctx: 1 <= n <= EXISTENCE_MAX_N,
            lambda n, ctx: check_existence_lower_bound(
                n, ctx.parts, ctx.mults, ctx.table_reaching(n * n)
            ).threshold,
            observed=_best_upto_square,
        ),
        BoundDefinition(
            "harmonic_chain",
            Direction.UPPER,
            lambda n, ctx: n >= 1 and is_naturals(ctx.mults),
            lambda n, ctx: harmonic_chain_bound(n, ctx.parts, ctx.precision),
        ),
        BoundDefinition(
            "debruijn_upper",
            Direction.UPPER,
            lambda n, ctx: n >= 2
            and n % 2 == 0
            and ctx.parts == Powers(base=2)
            and is_naturals(ctx.mults),
            lambda n, ctx: debruijn_upper_bound(n // 2, ctx.precision),
            log_scale=True,
        ),
        BoundDefinition(
            "sqrt_lower",
            Direction.LOWER,
            lambda n, ctx: n >= 1 and ctx.classical,
            lambda n, ctx: classical_sqrt_lower(n, ctx.precision),
        ),
        BoundDefinition(
            "classical_refined",
            Direction.LOWER,
            lambda n, ctx: n >= 1 and ctx.classical,
            lambda n, ctx: classical_refined_comparison(n, ctx.precision),
        ),
        BoundDefinition(
            "schur_point",
            Direction.LOWER,
            lambda n, ctx: ctx.coprime is not None
            and is_naturals(ctx.mults)
            and n in ctx.record_indices,
            lambda n, ctx: schur_style_point_lower(n, ctx.coprime),
        ),
        BoundDefinition(
            "refined",
            Direction.LOWER,
            _refined_applies,
            lambda n, ctx: refined_lower_bound(n, ctx.parts),
        ),
        BoundDefinition(
            "slow_growth",
            Direction.UPPER,
            lambda n, ctx: n >= 16
            and ctx.parts == SLOW_GROWTH_PARTS
            and ctx.mults == SLOW_GROWTH_MULTS,
            lambda n, ctx: _scaled(
                slow_growth_closed_form(n, ctx.precision), SLOW_GROWTH_SLACK
            ),
        ),
    )
}

BOUND_IDS = tuple(BOUNDS)


def _scaled(real: HighPrecisionReal, factor: int) -> HighPrecisionReal:
    return HighPrecisionReal(real.value * factor, real.precision)


class BoundEntry(BaseModel):
    bound_id: str
    direction: Literal["upper", "lower"]
    applicable: bool
    value: str | None = None
    precision: int | None = None
    satisfied: bool | None = None
    observed: DecimalCount | None = None
    verdict: Literal["satisfied", "violated", "undecided"] | None = None


class BoundReport(BaseModel):
    n: int
    exact: DecimalCount
    entries: list[BoundEntry]


def evaluate_bound(bound_id: str, n: int, ctx: BoundContext) -> BoundEntry:
    definition = BOUNDS[bound_id]
    if not definition.applies(n, ctx):
        return BoundEntry(
            bound_id=bound_id,
            direction=definition.direction.value,
            applicable=False,
        )

    value = definition.value(n, ctx)
    compared = value.exp() if definition.log_scale else value
    observed = definition.observed(n, ctx) if definition.observed else None
    exact = ctx.table[n] if observed is None else observed
    verdict = check_bound(exact, compared, definition.direction)
    return BoundEntry(
        bound_id=bound_id,
        direction=definition.direction.value,
        applicable=True,
        value=render_value(value),
        precision=value.precision if isinstance(value, HighPrecisionReal) else None,
        satisfied=None if verdict is Verdict.UNDECIDED else verdict is Verdict.SATISFIED,
        observed=observed,
        verdict=verdict.value,
    )


def _check_bound_ids(bound_ids: tuple[str, ...]) -> None:
    unknown = [bound_id for bound_id in bound_ids if bound_id not in BOUNDS]
    if unknown:
        raise InvalidInputError(
            f"Unknown bound id(s) {', '.join(unknown)}; "
            f"expected one of {', '.join(BOUND_IDS)}"
        )


def build_bound_report(
    n: int,
    parts: IntegerSetSpec,
    mults: IntegerSetSpec,
    table: CountTable | None = None,
    precision: int | None = None,
    bound_ids: tuple[str, ...] = BOUND_IDS,
) -> BoundReport:
    _check_bound_ids(bound_ids)
    if table is None or table.upto < n:
        table = count_table(n, parts, mults)
    ctx = BoundContext(parts, mults, table, resolve_precision(precision))
    entries = [evaluate_bound(bound_id, n, ctx) for bound_id in bound_ids]
    logger.debug(f"Bound report for n={n}: {len(entries)} entries")
    return BoundReport(n=n, exact=table[n], entries=entries)


def build_bound_reports(
    upto: int,
    parts: IntegerSetSpec,
    mults: IntegerSetSpec,
    table: CountTable | None = None,
    precision: int | None = None,
    bound_ids: tuple[str, ...] = BOUND_IDS,
) -> list[BoundReport]:
    """One BoundReport per n in [0, upto], sharing a single context."""
    _check_bound_ids(bound_ids)
    if table is None or table.upto < upto:
        table = count_table(upto, parts, mults)
    ctx = BoundContext(parts, mults, table, resolve_precision(precision))
    if "existence" in bound_ids:
        ctx.table_reaching(min(upto, EXISTENCE_MAX_N) ** 2)
    return [
        BoundReport(
            n=n,
            exact=table[n],
            entries=[evaluate_bound(bound_id, n, ctx) for bound_id in bound_ids],
        )
        for n in range(upto + 1)
    ]
