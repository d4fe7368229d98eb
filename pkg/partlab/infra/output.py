import enum
import json
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Any, Sequence

import click
import pandas as pd
from pydantic import BaseModel, PlainSerializer

# Counts outgrow 64 bits quickly, so JSON carries them as decimal strings
DecimalCount = Annotated[int, PlainSerializer(str, return_type=str)]


class OutputFormat(enum.Enum):
    TABLE = "table"
    CSV = "csv"
    JSON = "json"


def render_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (list, tuple)):
        return " ".join(render_value(item) for item in value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def to_json(payload: BaseModel | Sequence[BaseModel]) -> str:
    if isinstance(payload, BaseModel):
        data = payload.model_dump(mode="json")
    else:
        data = [item.model_dump(mode="json") for item in payload]
    return json.dumps(data, sort_keys=True, indent=2)


def _frame(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> pd.DataFrame:
    # cells stay strings so counts past 64 bits print exactly
    cells = [[render_value(cell) for cell in row] for row in rows]
    return pd.DataFrame(cells, columns=list(header), dtype=object)


def to_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    frame = _frame(header, rows)
    return frame.to_csv(index=False, lineterminator="\n").rstrip("\n")


def to_text_table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    if not rows:
        return "  ".join(header)
    text = _frame(header, rows).to_string(index=False)
    return "\n".join(line.rstrip() for line in text.splitlines())


def emit(text: str, out_path: Path | None = None) -> None:
    if out_path is None:
        click.echo(text)
    else:
        out_path.write_text(text + "\n")
