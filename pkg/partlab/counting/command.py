import logging

import click

from partlab.bounds import BoundReport, build_bound_report, build_bound_reports
from partlab.counting._count_response import CountResponse, TableResponse, TableRow
from partlab.counting._dynamic import count_table
from partlab.infra.output import (
    OutputFormat,
    emit,
    to_csv,
    to_json,
    to_text_table,
)
from partlab.infra.run_config import (
    Command,
    RunConfig,
    bounds_option,
    build_config,
    format_option,
    mults_option,
    out_option,
    parts_option,
    precision_option,
)
from partlab.setspec import format_set_spec

logger = logging.getLogger(__name__)

REPORT_HEADER = ("bound_id", "direction", "applicable", "value", "precision", "verdict")


def _render(header, rows, config: RunConfig) -> str:
    if config.format is OutputFormat.CSV:
        return to_csv(header, rows)
    return to_text_table(header, rows)


def _report_text(report: BoundReport, config: RunConfig) -> str:
    rows = [
        (
            entry.bound_id,
            entry.direction,
            entry.applicable,
            entry.value,
            entry.precision,
            entry.verdict,
        )
        for entry in report.entries
    ]
    body = _render(REPORT_HEADER, rows, config)
    if config.format is OutputFormat.CSV:
        return body
    return f"n={report.n} count={report.exact}\n{body}"


@click.command("count")
@parts_option
@mults_option
@click.option("--n", "n", type=int, required=True, help="The integer to partition.")
@click.option("--report", is_flag=True, help="Print every applicable bound at n.")
@format_option()
@precision_option
@out_option
def count(report: bool, **options) -> None:
    """Print p(n; parts, mults) exactly."""
    config = build_config(Command.COUNT, **options)
    parts, mults = config.parts(), config.mults()

    if report:
        bound_report = build_bound_report(config.n, parts, mults, precision=config.precision)
        if config.format is OutputFormat.JSON:
            emit(to_json(bound_report), config.output_path)
        else:
            emit(_report_text(bound_report, config), config.output_path)
        return

    value = count_table(config.n, parts, mults)[config.n]
    if config.format is OutputFormat.JSON:
        response = CountResponse(
            n=config.n,
            parts=format_set_spec(parts),
            mults=format_set_spec(mults),
            count=value,
        )
        emit(to_json(response), config.output_path)
    elif config.format is OutputFormat.CSV:
        emit(to_csv(("n", "count"), [(config.n, value)]), config.output_path)
    else:
        emit(str(value), config.output_path)


@click.command("table")
@parts_option
@mults_option
@click.option("--upto", "upto", type=int, required=True, help="Last n of the table.")
@bounds_option
@format_option(OutputFormat.CSV)
@precision_option
@out_option
def table(**options) -> None:
    """Print p(0..upto) with optional bound columns."""
    config = build_config(Command.TABLE, **options)
    parts, mults = config.parts(), config.mults()
    values = count_table(config.upto, parts, mults)

    bound_columns: list[dict[str, str | None]] = [{} for _ in range(config.upto + 1)]
    if config.bounds:
        reports = build_bound_reports(
            config.upto,
            parts,
            mults,
            table=values,
            precision=config.precision,
            bound_ids=config.bounds,
        )
        bound_columns = [
            {entry.bound_id: entry.value for entry in report.entries} for report in reports
        ]
    logger.debug(f"Table to {config.upto} with bounds {config.bounds}")

    if config.format is OutputFormat.JSON:
        response = TableResponse(
            parts=format_set_spec(parts),
            mults=format_set_spec(mults),
            upto=config.upto,
            rows=[
                TableRow(n=n, count=values[n], bounds=bound_columns[n])
                for n in range(config.upto + 1)
            ],
        )
        emit(to_json(response), config.output_path)
        return

    header = ("n", "count", *config.bounds)
    rows = [
        (n, values[n], *(bound_columns[n][bound_id] for bound_id in config.bounds))
        for n in range(config.upto + 1)
    ]
    emit(_render(header, rows, config), config.output_path)
