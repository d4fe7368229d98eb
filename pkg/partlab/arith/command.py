import click

from partlab.arith._analysis import analyze_parts
from partlab.infra.output import OutputFormat, emit, to_csv, to_json, to_text_table
from partlab.infra.run_config import Command, build_config, format_option, out_option, parts_option


@click.command("analyze")
@parts_option
@format_option()
@out_option
def analyze(**options) -> None:
    """gcd, coprime prefix, positivity, Frobenius threshold and monotonicity of a part set."""
    config = build_config(Command.ANALYZE, **options)
    response = analyze_parts(config.parts())

    if config.format is OutputFormat.JSON:
        emit(to_json(response), config.output_path)
        return
    rows = list(response.model_dump().items())
    if config.format is OutputFormat.CSV:
        emit(to_csv(("key", "value"), rows), config.output_path)
    else:
        emit(to_text_table(("key", "value"), rows), config.output_path)
