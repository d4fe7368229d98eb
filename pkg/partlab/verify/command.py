import logging

import click

from partlab.infra import settings
from partlab.infra.output import OutputFormat, emit, to_csv, to_json, to_text_table
from partlab.infra.run_config import (
    Command,
    RunConfig,
    build_config,
    format_option,
    out_option,
    precision_option,
)
from partlab.util.exceptions import SuiteFailedError
from partlab.verify._suite_result import SuiteResult
from partlab.verify._suites import SUITES, run_suite

logger = logging.getLogger(__name__)

SUMMARY_HEADER = ("suite", "cases", "failures", "elapsed_ms")


def _summary(results: list[SuiteResult], config: RunConfig) -> str:
    rows = [(r.suite, r.cases, len(r.failures), r.elapsed_ms) for r in results]
    if config.format is OutputFormat.CSV:
        return to_csv(SUMMARY_HEADER, rows)
    lines = [to_text_table(SUMMARY_HEADER, rows)]
    for result in results:
        for key, value in sorted(result.observations.items()):
            lines.append(f"{result.suite}: {key} = {value}")
        for bound_id, onset in sorted(result.onsets.items()):
            lines.append(f"{result.suite}: onset {bound_id} = {onset}")
        for failure in result.failures[:10]:
            lines.append(
                f"{result.suite}: FAIL {failure.inputs} "
                f"expected {failure.expected}, got {failure.got}"
            )
    return "\n".join(lines)


def _list_suites() -> str:
    return to_text_table(
        ("suite", "parameters"),
        [(name, suite.parameters) for name, suite in SUITES.items()],
    )


@click.command("verify")
@click.option("--suite", "suite", default=None, help="Suite name, or 'all'.")
@click.option("--list", "list_suites", is_flag=True, help="List suites and their parameters.")
@click.option("--timing", is_flag=True, help="Record wall time in the report.")
@format_option(OutputFormat.JSON)
@precision_option
@out_option
def verify(list_suites: bool, timing: bool, **options) -> None:
    """Run a named verification suite; exits 3 if any case fails."""
    if list_suites:
        click.echo(_list_suites())
        return
    config = build_config(Command.VERIFY, **options)
    if config.suite is None:
        raise click.UsageError("Either --suite NAME or --list is required")

    names = list(SUITES) if config.suite == "all" else [config.suite]
    record_timing = timing or settings.REPORT_TIMING
    results = [run_suite(name, config.precision, record_timing) for name in names]

    if config.format is OutputFormat.JSON:
        payload = results if config.suite == "all" else results[0]
        emit(to_json(payload), config.output_path)
    else:
        emit(_summary(results, config), config.output_path)

    failed = [result.suite for result in results if not result.passed]
    if failed:
        raise SuiteFailedError(f"Suite(s) failed: {', '.join(failed)}")
