import logging
from pathlib import Path

import click
from pydantic import BaseModel

from partlab.infra.output import OutputFormat, to_json
from partlab.infra.run_config import Command, build_config, format_option
from partlab.setspec._parser import format_set_spec
from partlab.setspec._sparse import (
    construct_sparse_set,
    guarantee_violations,
    read_epsilon_table,
    write_anchors,
)

logger = logging.getLogger(__name__)


class SparseResponse(BaseModel):
    spec: str
    anchors: list[int]
    upto: int


@click.command("sparse")
@click.option(
    "--epsilon",
    "epsilon_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    required=True,
    help="Step-function file: one 'threshold value' pair per line.",
)
@click.option("--count", "anchor_count", type=click.IntRange(min=1), default=None)
@click.option(
    "--out",
    "output_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Anchors file, readable back as sparse:@PATH.",
)
@format_option()
def sparse(epsilon_path: Path, anchor_count: int | None, **options) -> None:
    """Build a part set whose counting function stays below epsilon(n) - 1."""
    config = build_config(Command.SPARSE, **options)
    epsilon = read_epsilon_table(epsilon_path)
    spec = construct_sparse_set(epsilon, anchor_count)

    violations = guarantee_violations(spec, epsilon)
    if violations:
        logger.warning(f"Counting guarantee fails at {violations[:10]}")

    if config.output_path is not None:
        write_anchors(config.output_path, spec.anchors)
        spec = spec.model_copy(update={"source": str(config.output_path)})

    if config.format is OutputFormat.JSON:
        response = SparseResponse(
            spec=format_set_spec(spec), anchors=list(spec.anchors), upto=epsilon.upto
        )
        click.echo(to_json(response))
    else:
        click.echo(format_set_spec(spec))
