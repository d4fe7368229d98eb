import enum
from pathlib import Path

import click
from pydantic import BaseModel, ConfigDict, Field

from partlab.infra import settings
from partlab.infra.output import OutputFormat
from partlab.setspec import IntegerSetSpec, SetKind, parse_set_spec


class Command(enum.Enum):
    COUNT = "count"
    TABLE = "table"
    ANALYZE = "analyze"
    VERIFY = "verify"
    EXPLORE = "explore"
    SPARSE = "sparse"


class RunConfig(BaseModel):
    """One validated invocation of a partlab command."""

    model_config = ConfigDict(frozen=True)

    command: Command
    parts_spec: str | None = None
    mults_spec: str = "nat"
    n: int | None = Field(None, ge=0)
    upto: int | None = Field(None, ge=0)
    format: OutputFormat = OutputFormat.TABLE
    precision: int = Field(default_factory=lambda: settings.DEFAULT_PRECISION, ge=10)
    bounds: tuple[str, ...] = ()
    suite: str | None = None
    output_path: Path | None = None

    def parts(self) -> IntegerSetSpec:
        return parse_set_spec(self.parts_spec, SetKind.PARTS)

    def mults(self) -> IntegerSetSpec:
        return parse_set_spec(self.mults_spec, SetKind.MULTS)


def _split_ids(ctx, param, value: str | None) -> tuple[str, ...]:
    if not value:
        return ()
    return tuple(item.strip() for item in value.split(",") if item.strip())


parts_option = click.option(
    "--parts", "parts_spec", required=True, help="Part set, e.g. all, finite:3,5, pow:2."
)
mults_option = click.option(
    "--mults", "mults_spec", default="nat", show_default=True, help="Multiplicity set."
)
precision_option = click.option(
    "--precision",
    type=int,
    default=None,
    help="Working precision in decimal digits (PARTLAB_PRECISION).",
)
out_option = click.option(
    "--out", "output_path", type=click.Path(dir_okay=False, path_type=Path), default=None
)
bounds_option = click.option(
    "--bounds", callback=_split_ids, default=None, help="Comma-separated bound ids."
)


def format_option(default: OutputFormat = OutputFormat.TABLE):
    return click.option(
        "--format",
        "output_format",
        type=click.Choice([fmt.value for fmt in OutputFormat]),
        default=default.value,
        show_default=True,
    )


def build_config(command: Command, **options) -> RunConfig:
    """RunConfig from click's keyword arguments; unset options keep their defaults."""
    if "output_format" in options:
        options["format"] = OutputFormat(options.pop("output_format"))
    return RunConfig(
        command=command,
        **{key: value for key, value in options.items() if value is not None},
    )
