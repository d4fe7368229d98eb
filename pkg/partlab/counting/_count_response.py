from pydantic import BaseModel

from partlab.infra.output import DecimalCount


class CountResponse(BaseModel):
    n: int
    parts: str
    mults: str
    count: DecimalCount


class TableRow(BaseModel):
    n: int
    count: DecimalCount
    bounds: dict[str, str | None] = {}


class TableResponse(BaseModel):
    parts: str
    mults: str
    upto: int
    rows: list[TableRow]
