"""Named verification suites.

Each suite runs at fixed desk-scale parameters (listed by `verify --list`) and
returns a SuiteResult; a suite passes when it records no failure.
"""

import logging
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

import mpmath

from partlab.arith import (
    EMPIRICAL_WINDOW_END,
    FiniteCoprimeSet,
    coprime_prefix,
    empirical_window_start,
    eventually_strictly_increasing,
    first_non_increase,
    frobenius_threshold,
    gcd_of_set,
    scale_down,
)
from partlab.bounds import (
    SLOW_GROWTH_MULTS,
    SLOW_GROWTH_PARTS,
    SLOW_GROWTH_SLACK,
    Direction,
    HighPrecisionReal,
    Verdict,
    check_bound,
    check_existence_lower_bound,
    classical_refined_comparison,
    classical_sqrt_lower,
    debruijn_leading_term,
    debruijn_upper_bound,
    harmonic_chain_bound,
    hrr_leading_term,
    monotone_lower_bound,
    padberg_lower,
    product_upper_bound,
    refined_lower_bound,
    schur_asymptotic,
    schur_style_point_lower,
    slow_growth_closed_form,
)
from partlab.counting import (
    CountTable,
    brute_force_count,
    count_table,
    euler_pentagonal_table,
)
from partlab.infra.output import render_value
from partlab.setspec import (
    NATURALS,
    AllFrom,
    EpsilonTable,
    Powers,
    construct_sparse_set,
    guarantee_violations,
)
from partlab.util.exceptions import InvalidInputError
from partlab.verify._corpus import containment_pairs, coprime_corpus, corpus
from partlab.verify._suite_result import OnsetTracker, SuiteRecorder, SuiteResult

logger = logging.getLogger(__name__)

ALL_PARTS = AllFrom(start=1)

ORACLE_UPTO = 30
CONTAINMENT_UPTO = 200
CLASSICAL_UPTO = 500
P_100 = 190569292
EQ4_UPTO = 200
EQ5_UPTO = 30
MONOTONE_UPTO = 200
HRR_RANGE = (200, 500)
HRR_POINTS = (200, 300, 500)
DEBRUIJN_UPTO = 2**12
DEBRUIJN_RATIO_AT = 2**16
CHAIN_UPTO = 200
PADBERG_UPTO = 500
RECORD_UPTO = 500
REFINED_RANGE = (10, 2000)
CLASSICAL_ASSERT_FROM = 100
SLOW_GROWTH_UPTO = 2**20
MONOTONICITY_MAX_ELEMENT = 12
MONOTONICITY_MAX_K = 4
MONOTONICITY_TAIL_START = 1800
SPARSE_LEVELS = 4
FROBENIUS_PAIR_LIMIT = 30
POSITIVITY_SPAN = 100
POSITIVITY_GCD_UPTO = 200


def _ratio(exact: int, real: HighPrecisionReal) -> mpmath.mpf:
    with mpmath.workdps(real.precision):
        return mpmath.mpf(exact) / real.value


def _fmt(value: mpmath.mpf) -> str:
    return mpmath.nstr(value, 10)


def suite_oracle(precision: int) -> SuiteResult:
    rec = SuiteRecorder("oracle")
    for entry in corpus():
        table = count_table(ORACLE_UPTO, entry.parts, entry.mults)
        for n in range(ORACLE_UPTO + 1):
            brute = brute_force_count(n, entry.parts, entry.mults)
            rec.check(table[n] == brute, entry.inputs(n=n), brute, table[n])
    for smaller, larger in containment_pairs():
        low = count_table(CONTAINMENT_UPTO, smaller.parts, smaller.mults)
        high = count_table(CONTAINMENT_UPTO, larger.parts, larger.mults)
        n = next((n for n in range(CONTAINMENT_UPTO + 1) if low[n] > high[n]), None)
        rec.check(
            n is None,
            {"smaller": smaller.label, "larger": larger.label, "upto": CONTAINMENT_UPTO},
            "p(n) never drops when the sets grow",
            f"p({n}) = {low[n]} > {high[n]}" if n is not None else "",
        )
    return rec.result()


def suite_classical(precision: int) -> SuiteResult:
    rec = SuiteRecorder("classical")
    table = count_table(CLASSICAL_UPTO, ALL_PARTS, NATURALS)
    oracle = euler_pentagonal_table(CLASSICAL_UPTO)
    for n in range(CLASSICAL_UPTO + 1):
        rec.check(table[n] == oracle[n], {"n": n}, oracle[n], table[n])
    rec.check(table[100] == P_100, {"n": 100, "source": "table"}, P_100, table[100])
    rec.check(oracle[100] == P_100, {"n": 100, "source": "pentagonal"}, P_100, oracle[100])
    return rec.result()


def suite_eq4(precision: int) -> SuiteResult:
    rec = SuiteRecorder("eq4")
    for entry in corpus():
        table = count_table(EQ4_UPTO, entry.parts, entry.mults)
        for n in range(EQ4_UPTO + 1):
            bound = product_upper_bound(n, entry.parts, entry.mults)
            rec.check(table[n] <= bound, entry.inputs(n=n), f"<= {bound}", table[n])
    return rec.result()


def suite_eq5(precision: int) -> SuiteResult:
    rec = SuiteRecorder("eq5")
    for entry in corpus():
        table = count_table(EQ5_UPTO**2, entry.parts, entry.mults)
        for n in range(1, EQ5_UPTO + 1):
            witness = check_existence_lower_bound(n, entry.parts, entry.mults, table)
            rec.check(
                witness.found,
                entry.inputs(n=n),
                f"some r <= {n * n} with p(r) >= {render_value(witness.threshold)}",
                f"r={witness.r}",
            )
    return rec.result()


def suite_monotone_lb(precision: int) -> SuiteResult:
    rec = SuiteRecorder("monotone-lb")
    skipped = []
    for entry in corpus():
        table = count_table(MONOTONE_UPTO, entry.parts, entry.mults)
        if not table.is_nondecreasing():
            skipped.append(entry.label)
            continue
        for n in range(1, MONOTONE_UPTO + 1):
            bound = monotone_lower_bound(n, entry.parts, entry.mults)
            rec.check(
                table[n] >= bound,
                entry.inputs(n=n),
                f">= {render_value(bound)}",
                table[n],
            )
    rec.observe("skipped_not_monotone", len(skipped))
    return rec.result()


def suite_schur(precision: int) -> SuiteResult:
    rec = SuiteRecorder("schur")
    small = FiniteCoprimeSet((1, 2, 3))
    table = count_table(2000, small.as_spec(), NATURALS)
    ratios = {n: table[n] / schur_asymptotic(n, small) for n in (500, 1000, 2000)}
    for n, ratio in ratios.items():
        rec.observe(f"ratio_1_2_3_at_{n}", f"{float(ratio):.6f}")
    rec.check(
        abs(ratios[2000] - 1) <= Fraction(1, 100),
        {"parts": "finite:1,2,3", "n": 2000},
        "|ratio - 1| <= 0.01",
        f"{float(ratios[2000]):.6f}",
    )
    distances = [abs(ratios[n] - 1) for n in (500, 1000, 2000)]
    rec.check(
        distances[0] > distances[1] > distances[2],
        {"parts": "finite:1,2,3", "n": "500,1000,2000"},
        "ratio approaches 1 monotonically",
        ",".join(f"{float(d):.6f}" for d in distances),
    )

    wide = FiniteCoprimeSet((3, 5, 7))
    table = count_table(5000, wide.as_spec(), NATURALS)
    ratio = table[5000] / schur_asymptotic(5000, wide)
    rec.observe("ratio_3_5_7_at_5000", f"{float(ratio):.6f}")
    rec.check(
        Fraction(9, 10) <= ratio <= Fraction(11, 10),
        {"parts": "finite:3,5,7", "n": 5000},
        "ratio in [0.9, 1.1]",
        f"{float(ratio):.6f}",
    )
    return rec.result()


def suite_hrr(precision: int) -> SuiteResult:
    rec = SuiteRecorder("hrr")
    low, high = HRR_RANGE
    table = count_table(high, ALL_PARTS, NATURALS)
    ratios = {}
    for n in range(low, high + 1):
        ratio = _ratio(table[n], hrr_leading_term(n, precision))
        ratios[n] = ratio
        rec.check(0.9 <= ratio <= 1, {"n": n}, "ratio in [0.90, 1.00]", _fmt(ratio))
    points = [ratios[n] for n in HRR_POINTS]
    rec.check(
        points[0] < points[1] < points[2],
        {"n": ",".join(map(str, HRR_POINTS))},
        "strictly increasing ratio",
        ",".join(_fmt(r) for r in points),
    )
    for n in HRR_POINTS:
        rec.observe(f"ratio_at_{n}", _fmt(ratios[n]))
    return rec.result()


def suite_debruijn(precision: int) -> SuiteResult:
    rec = SuiteRecorder("debruijn")
    binary = Powers(base=2)
    table = count_table(2 * DEBRUIJN_UPTO, binary, NATURALS)
    for n in range(1, DEBRUIJN_UPTO + 1):
        bound = debruijn_upper_bound(n, precision)
        verdict = check_bound(table[2 * n], bound.exp(), Direction.UPPER)
        rec.check(
            verdict is Verdict.SATISFIED,
            {"parts": "pow:2", "n": n},
            f"log p(2n) <= {bound}",
            verdict.value,
        )

    big = 2 * DEBRUIJN_RATIO_AT
    table = count_table(big, binary, NATURALS)
    leading = debruijn_leading_term(DEBRUIJN_RATIO_AT, precision)
    with mpmath.workdps(leading.precision):
        ratio = mpmath.log(table[big]) / leading.value
    rec.observe("log_ratio_at_2^16", _fmt(ratio))
    rec.check(
        0.3 <= ratio <= 1.5,
        {"parts": "pow:2", "n": DEBRUIJN_RATIO_AT},
        "log p(2n) / leading term in [0.3, 1.5]",
        _fmt(ratio),
    )
    return rec.result()


def _check_chain(
    rec: SuiteRecorder, table: CountTable, start: int, inputs, precision: int
) -> None:
    for n in range(max(start, 1), min(CHAIN_UPTO, table.upto) + 1):
        bound = harmonic_chain_bound(n, table.parts, precision)
        verdict = check_bound(table[n], bound, Direction.UPPER)
        rec.check(verdict is Verdict.SATISFIED, inputs(n=n), f"<= {bound}", table[n])


def suite_harmonic_chain(precision: int) -> SuiteResult:
    rec = SuiteRecorder("harmonic-chain")
    seen = set()
    for entry in corpus():
        if not entry.unrestricted or entry.parts in seen:
            continue
        seen.add(entry.parts)
        table = count_table(CHAIN_UPTO, entry.parts, entry.mults)
        _check_chain(rec, table, 1, entry.inputs, precision)
    return rec.result()


def suite_padberg(precision: int) -> SuiteResult:
    rec = SuiteRecorder("padberg")
    for coprime in coprime_corpus():
        table = count_table(PADBERG_UPTO, coprime.as_spec(), NATURALS)
        cumulative = table.cumulative()
        for n in range(PADBERG_UPTO + 1):
            bound = padberg_lower(n, coprime)
            inputs = {"parts": list(coprime.elements), "n": n}
            rendered = render_value(bound)
            rec.check(cumulative[n] >= bound, inputs, f">= {rendered}", cumulative[n])
            if coprime.elements == (1,):
                rec.check(cumulative[n] == bound, inputs, f"== {rendered}", cumulative[n])
    return rec.result()


def suite_eq10(precision: int) -> SuiteResult:
    rec = SuiteRecorder("eq10")
    for coprime in coprime_corpus():
        table = count_table(RECORD_UPTO, coprime.as_spec(), NATURALS)
        for n in table.record_indices():
            bound = schur_style_point_lower(n, coprime)
            rec.check(
                table[n] >= bound,
                {"parts": list(coprime.elements), "n": n},
                f">= {render_value(bound)}",
                table[n],
            )
    return rec.result()


def _classical_lower(
    rec: SuiteRecorder,
    table: CountTable,
    bound_id: str,
    evaluator: Callable[[int, int], HighPrecisionReal],
    precision: int,
) -> None:
    # onset over [1, N]; the inequality is asserted only from CLASSICAL_ASSERT_FROM
    tracker = OnsetTracker(1)
    for n in range(1, table.upto + 1):
        bound = evaluator(n, precision)
        verdict = check_bound(table[n], bound, Direction.LOWER)
        holds = verdict is Verdict.SATISFIED
        tracker.record(n, holds)
        if n >= CLASSICAL_ASSERT_FROM:
            rec.check(holds, {"bound": bound_id, "n": n}, f">= {bound}", table[n])
    rec.onset(bound_id, tracker.onset)


def suite_refined(precision: int) -> SuiteResult:
    rec = SuiteRecorder("refined")
    low, high = REFINED_RANGE
    table = count_table(high, ALL_PARTS, NATURALS)
    smallest = largest = None
    for n in range(low, high + 1):
        bound = refined_lower_bound(n, ALL_PARTS)
        rec.check(table[n] >= bound, {"n": n}, f">= {render_value(bound)}", table[n])
        ratio = float(classical_refined_comparison(n, precision)) / float(bound)
        smallest = ratio if smallest is None else min(smallest, ratio)
        largest = ratio if largest is None else max(largest, ratio)
    rec.observe("classical_to_refined_ratio_min", f"{smallest:.6g}")
    rec.observe("classical_to_refined_ratio_max", f"{largest:.6g}")
    _classical_lower(rec, table, "classical_refined", classical_refined_comparison, precision)
    _classical_lower(rec, table, "sqrt_lower", classical_sqrt_lower, precision)
    return rec.result()


def suite_sqrt_lower(precision: int) -> SuiteResult:
    rec = SuiteRecorder("sqrt-lower")
    table = count_table(REFINED_RANGE[1], ALL_PARTS, NATURALS)
    _classical_lower(rec, table, "sqrt_lower", classical_sqrt_lower, precision)
    return rec.result()


def suite_slow_growth(precision: int) -> SuiteResult:
    rec = SuiteRecorder("slow-growth")
    table = count_table(SLOW_GROWTH_UPTO, SLOW_GROWTH_PARTS, SLOW_GROWTH_MULTS)
    values = table.values

    odd_nonzero = [n for n in range(17, SLOW_GROWTH_UPTO + 1, 2) if values[n]]
    rec.check(
        not odd_nonzero,
        {"parts": "dexp:2", "mults": "zero|dexp:2", "n": "odd in [16, 2^20]"},
        "p(n) = 0",
        f"nonzero at {odd_nonzero[:10]}",
    )

    # The closed form increases with n, so the worst ratio p(n)/f(n) sits at an
    # index where p exceeds every earlier value in the range
    best = -1
    slack = mpmath.mpf(0)
    for n in range(16, SLOW_GROWTH_UPTO + 1):
        if values[n] <= best:
            continue
        best = values[n]
        closed_form = slow_growth_closed_form(n, precision)
        bound = HighPrecisionReal(closed_form.value * SLOW_GROWTH_SLACK, closed_form.precision)
        verdict = check_bound(values[n], bound, Direction.UPPER)
        rec.check(
            verdict is Verdict.SATISFIED,
            {"parts": "dexp:2", "mults": "zero|dexp:2", "n": n},
            f"<= {bound}",
            values[n],
        )
        slack = max(slack, _ratio(values[n], closed_form))
    rec.observe("max_count", best)
    rec.observe("minimal_slack", _fmt(slack))
    return rec.result()


def _last_non_increase(values, start: int, end: int) -> int | None:
    for n in range(end, max(start, 1) - 1, -1):
        if values[n] <= values[n - 1]:
            return n
    return None


def suite_monotonicity_criterion(precision: int) -> SuiteResult:
    rec = SuiteRecorder("monotonicity-criterion")
    candidates = []
    late = []
    for k in range(1, MONOTONICITY_MAX_K + 1):
        for elements in combinations(range(1, MONOTONICITY_MAX_ELEMENT + 1), k):
            if math.gcd(*elements) != 1:
                continue
            coprime = FiniteCoprimeSet(elements)
            table = count_table(EMPIRICAL_WINDOW_END, coprime.as_spec(), NATURALS)
            start = empirical_window_start(coprime)
            violation = first_non_increase(table.values, start, EMPIRICAL_WINDOW_END)
            if not eventually_strictly_increasing(coprime):
                if violation is None:
                    candidates.append(elements)
                continue
            if 1 in elements:
                # p(n) - p(n-1) = p(n; set without 1), positive once n passes
                # that subset's threshold, which the window start always does
                rec.check(
                    violation is None,
                    {"parts": list(elements), "window_start": start},
                    f"strictly increasing on [{start}, {EMPIRICAL_WINDOW_END}]",
                    f"p({violation}) <= p({violation - 1})" if violation else "",
                )
            else:
                tail_start = MONOTONICITY_TAIL_START
                tail = first_non_increase(table.values, tail_start, EMPIRICAL_WINDOW_END)
                rec.check(
                    tail is None,
                    {"parts": list(elements), "window_start": tail_start},
                    f"strictly increasing on [{tail_start}, {EMPIRICAL_WINDOW_END}]",
                    f"p({tail}) <= p({tail - 1})" if tail else "",
                )
                if violation is not None:
                    settled = _last_non_increase(table.values, start, EMPIRICAL_WINDOW_END) + 1
                    late.append(f"{','.join(map(str, elements))}@{settled}")

    # converse candidates and late settle points are reported, not asserted
    rec.observe("converse_candidates", len(candidates))
    if candidates:
        rec.observe("converse_candidates_first", list(candidates[:10]))
    rec.observe("late_stabilization", len(late))
    if late:
        rec.observe("late_stabilization_first", late[:10])

    pair = FiniteCoprimeSet((2, 3))
    table = count_table(7, pair.as_spec(), NATURALS)
    rec.check(
        not eventually_strictly_increasing(pair) and table[6] == 2 and table[7] == 1,
        {"parts": [2, 3]},
        "criterion false with p(6)=2 > p(7)=1",
        f"p(6)={table[6]}, p(7)={table[7]}",
    )
    for elements, expected in (((3, 4, 5), True), ((2, 4, 5), False)):
        got = eventually_strictly_increasing(FiniteCoprimeSet(elements))
        rec.check(got == expected, {"parts": list(elements)}, expected, got)

    # p(29) = p(28) = 10 for {3,4,5}, so its stabilization is checked on the upper half
    triple = FiniteCoprimeSet((3, 4, 5))
    table = count_table(EMPIRICAL_WINDOW_END, triple.as_spec(), NATURALS)
    tail = EMPIRICAL_WINDOW_END // 2
    violation = first_non_increase(table.values, tail, EMPIRICAL_WINDOW_END)
    rec.check(
        violation is None,
        {"parts": [3, 4, 5], "window_start": tail},
        f"strictly increasing on [{tail}, {EMPIRICAL_WINDOW_END}]",
        f"p({violation}) <= p({violation - 1})" if violation else "",
    )
    return rec.result()


def iterated_log_epsilon(levels: int) -> EpsilonTable:
    """floor(lg lg x) tabulated up to 2^(2^levels)."""
    return EpsilonTable(steps=tuple((2 ** (2**v), v) for v in range(1, levels + 1)))


def suite_sparse_construction(precision: int) -> SuiteResult:
    rec = SuiteRecorder("sparse-construction")
    epsilon = iterated_log_epsilon(SPARSE_LEVELS)
    sparse = construct_sparse_set(epsilon)
    rec.observe("anchors", list(sparse.anchors))

    violations = guarantee_violations(sparse, epsilon)
    rec.check(
        not violations,
        {"epsilon": "floor(lg lg x)", "upto": epsilon.upto},
        "A(n) + 1 <= epsilon(n)",
        f"fails at {violations[:10]}",
    )

    table = count_table(epsilon.upto, sparse, NATURALS)
    for n in range(sparse.anchors[0], epsilon.upto + 1):
        power = n ** epsilon.value_at(n)
        rec.check(table[n] <= power, {"n": n}, f"<= n^epsilon(n) = {power}", table[n])

    def inputs(**extra) -> dict:
        return {"parts": "sparse:" + ",".join(map(str, sparse.anchors)), **extra}

    _check_chain(rec, table, sparse.anchors[0], inputs, precision)
    return rec.result()


def suite_frobenius(precision: int) -> SuiteResult:
    rec = SuiteRecorder("frobenius")
    for elements, expected in (((3, 5), 8), ((6, 10, 15), 30), ((1,), 0)):
        got = frobenius_threshold(FiniteCoprimeSet(elements))
        rec.check(got == expected, {"parts": list(elements)}, expected, got)
    for a in range(1, FROBENIUS_PAIR_LIMIT + 1):
        for b in range(a + 1, FROBENIUS_PAIR_LIMIT + 1):
            if math.gcd(a, b) != 1:
                continue
            expected = a * b - a - b + 1
            got = frobenius_threshold(FiniteCoprimeSet((a, b)))
            rec.check(got == expected, {"parts": [a, b]}, expected, got)
    return rec.result()


def suite_positivity(precision: int) -> SuiteResult:
    rec = SuiteRecorder("positivity")
    for entry in corpus():
        g = gcd_of_set(entry.parts)
        if g == 1 and entry.unrestricted:
            prefix, _ = coprime_prefix(entry.parts)
            threshold = frobenius_threshold(prefix)
            table = count_table(threshold + POSITIVITY_SPAN, entry.parts, entry.mults)
            zeros = [n for n in range(threshold, table.upto + 1) if table[n] == 0]
            rec.check(
                not zeros,
                entry.inputs(n=f"[{threshold}, {table.upto}]"),
                "p(n) > 0",
                f"zero at {zeros[:10]}",
            )
        elif g > 1:
            table = count_table(POSITIVITY_GCD_UPTO, entry.parts, entry.mults)
            stray = [n for n in range(table.upto + 1) if n % g and table[n]]
            rec.check(
                not stray,
                entry.inputs(gcd=g),
                "p(n) = 0 whenever gcd does not divide n",
                f"nonzero at {stray[:10]}",
            )
            scaled = scale_down(entry.parts, g)
            if scaled is not None:
                small = count_table(POSITIVITY_GCD_UPTO // g, scaled, entry.mults)
                mismatched = [
                    n for n in range(0, table.upto + 1, g) if table[n] != small[n // g]
                ]
                rec.check(
                    not mismatched,
                    entry.inputs(gcd=g),
                    "p(n; S, M) = p(n/g; S/g, M)",
                    f"differs at {mismatched[:10]}",
                )

    for coprime in coprime_corpus():
        threshold = frobenius_threshold(coprime)
        end = threshold + 2 * max(coprime.elements)
        table = count_table(end, coprime.as_spec(), NATURALS)
        inputs = {"parts": list(coprime.elements), "threshold": threshold}
        if threshold > 0:
            before = table[threshold - 1]
            rec.check(before == 0, inputs, "p(threshold - 1) = 0", before)
        zeros = [n for n in range(threshold, end + 1) if table[n] == 0]
        rec.check(
            not zeros, inputs, f"p(n) > 0 on [{threshold}, {end}]", f"zero at {zeros[:10]}"
        )
    return rec.result()


@dataclass(frozen=True)
class SuiteDefinition:
    name: str
    parameters: str
    runner: Callable[[int], SuiteResult]


SUITES: dict[str, SuiteDefinition] = {
    suite.name: suite
    for suite in (
        SuiteDefinition(
            "oracle",
            f"corpus pairs, n <= {ORACLE_UPTO}, DP vs brute force; "
            f"counts grow with the sets, n <= {CONTAINMENT_UPTO}",
            suite_oracle,
        ),
        SuiteDefinition(
            "classical",
            f"S=all, M=nat, n <= {CLASSICAL_UPTO}, DP vs pentagonal recurrence",
            suite_classical,
        ),
        SuiteDefinition(
            "eq4",
            f"corpus pairs, n <= {EQ4_UPTO}, p(n) <= prod M(n/a)",
            suite_eq4,
        ),
        SuiteDefinition(
            "eq5",
            f"corpus pairs, n <= {EQ5_UPTO}, witness r <= n^2",
            suite_eq5,
        ),
        SuiteDefinition(
            "monotone-lb",
            f"nondecreasing corpus tables, n <= {MONOTONE_UPTO}",
            suite_monotone_lb,
        ),
        SuiteDefinition(
            "schur",
            "{1,2,3} at 500/1000/2000 (tol 0.01), {3,5,7} at 5000 (tol 0.1)",
            suite_schur,
        ),
        SuiteDefinition(
            "hrr",
            f"S=all, n in [{HRR_RANGE[0]}, {HRR_RANGE[1]}], ratio in [0.90, 1.00]",
            suite_hrr,
        ),
        SuiteDefinition(
            "debruijn",
            f"S=pow:2, upper bound to n={DEBRUIJN_UPTO}; "
            f"ratio at n={DEBRUIJN_RATIO_AT} in [0.3, 1.5]",
            suite_debruijn,
        ),
        SuiteDefinition(
            "harmonic-chain",
            f"corpus part sets with M=nat, n <= {CHAIN_UPTO}",
            suite_harmonic_chain,
        ),
        SuiteDefinition(
            "padberg",
            f"finite coprime corpus, n <= {PADBERG_UPTO}",
            suite_padberg,
        ),
        SuiteDefinition(
            "eq10",
            f"finite coprime corpus, record indices n <= {RECORD_UPTO}",
            suite_eq10,
        ),
        SuiteDefinition(
            "refined",
            f"S=all, n in [{REFINED_RANGE[0]}, {REFINED_RANGE[1]}]; "
            f"classical forms asserted from {CLASSICAL_ASSERT_FROM}",
            suite_refined,
        ),
        SuiteDefinition(
            "sqrt-lower",
            f"S=all, n <= {REFINED_RANGE[1]}, onset reported, "
            f"asserted from {CLASSICAL_ASSERT_FROM}",
            suite_sqrt_lower,
        ),
        SuiteDefinition(
            "slow-growth",
            f"dexp:2 / zero|dexp:2, 16 <= n <= 2^20, slack {SLOW_GROWTH_SLACK}",
            suite_slow_growth,
        ),
        SuiteDefinition(
            "monotonicity-criterion",
            f"coprime sets, elements <= {MONOTONICITY_MAX_ELEMENT}, "
            f"k <= {MONOTONICITY_MAX_K}, window end {EMPIRICAL_WINDOW_END}, "
            f"tail asserted from {MONOTONICITY_TAIL_START}",
            suite_monotonicity_criterion,
        ),
        SuiteDefinition(
            "sparse-construction",
            f"epsilon = floor(lg lg x) to 2^(2^{SPARSE_LEVELS})",
            suite_sparse_construction,
        ),
        SuiteDefinition(
            "frobenius",
            f"fixed cases and coprime pairs a < b <= {FROBENIUS_PAIR_LIMIT}",
            suite_frobenius,
        ),
        SuiteDefinition(
            "positivity",
            f"corpus, [threshold, threshold + {POSITIVITY_SPAN}], "
            f"gcd zeros and scaling to {POSITIVITY_GCD_UPTO}",
            suite_positivity,
        ),
    )
}


def run_suite(name: str, precision: int, timing: bool = False) -> SuiteResult:
    if name not in SUITES:
        raise InvalidInputError(f"Unknown suite '{name}'")
    logger.info(f"Running suite {name}")
    started = time.perf_counter()
    result = SUITES[name].runner(precision)
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    logger.info(
        f"Suite {name}: {result.cases} cases, {len(result.failures)} failures, {elapsed_ms} ms"
    )
    if timing:
        result.elapsed_ms = elapsed_ms
    return result
