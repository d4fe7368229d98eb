import click

from partlab.counting import count_table
from partlab.explore._explore import explore_table
from partlab.infra.output import OutputFormat, emit, to_csv, to_json, to_text_table
from partlab.infra.run_config import (
    Command,
    build_config,
    format_option,
    mults_option,
    out_option,
    parts_option,
)


@click.command("explore")
@parts_option
@mults_option
@click.option("--upto", "upto", type=int, required=True)
@format_option()
@out_option
def explore(**options) -> None:
    """Zero pattern and growth summary of p(0..upto); reports, never concludes."""
    config = build_config(Command.EXPLORE, **options)
    summary = explore_table(count_table(config.upto, config.parts(), config.mults()))

    if config.format is OutputFormat.JSON:
        emit(to_json(summary), config.output_path)
        return
    rows = list(summary.model_dump().items())
    if config.format is OutputFormat.CSV:
        emit(to_csv(("key", "value"), rows), config.output_path)
    else:
        emit(to_text_table(("key", "value"), rows), config.output_path)
