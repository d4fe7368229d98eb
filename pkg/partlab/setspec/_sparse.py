import logging
from bisect import bisect_right
from pathlib import Path

from pydantic import BaseModel, ConfigDict, model_validator

from partlab.setspec._integer_set import SparseConstructed
from partlab.util.exceptions import InvalidInputError

logger = logging.getLogger(__name__)


class EpsilonTable(BaseModel):
    """A nondecreasing step function given by its (threshold, value) steps.

    epsilon(x) is the value of the last step whose threshold is <= x, and 0
    before the first step. The table covers x up to its last threshold.
    """

    model_config = ConfigDict(frozen=True)

    steps: tuple[tuple[int, int], ...]

    @model_validator(mode="after")
    def _check_steps(self) -> "EpsilonTable":
        if not self.steps:
            raise InvalidInputError("Epsilon table is empty")
        thresholds = [threshold for threshold, _ in self.steps]
        values = [value for _, value in self.steps]
        if thresholds[0] < 0:
            raise InvalidInputError("Epsilon thresholds must be nonnegative")
        if any(b <= a for a, b in zip(thresholds, thresholds[1:])):
            raise InvalidInputError("Epsilon thresholds must be strictly increasing")
        if any(b < a for a, b in zip(values, values[1:])):
            raise InvalidInputError("Epsilon values must be nondecreasing")
        return self

    @property
    def upto(self) -> int:
        return self.steps[-1][0]

    def value_at(self, x: int) -> int:
        index = bisect_right([threshold for threshold, _ in self.steps], x)
        return self.steps[index - 1][1] if index else 0

    def first_reaching(self, value: int) -> int | None:
        for threshold, step_value in self.steps:
            if step_value >= value:
                return threshold
        return None


def construct_sparse_set(
    epsilon: EpsilonTable, count: int | None = None
) -> SparseConstructed:
    """Anchors a_i = least x > a_(i-1) with epsilon(x) >= i + 1.

    Over the tabulated range the counting function A(n) of the result then
    satisfies A(n) + 1 <= epsilon(n) for every n >= a_1.
    """
    anchors: list[int] = []
    previous = 0
    while count is None or len(anchors) < count:
        reached = epsilon.first_reaching(len(anchors) + 2)
        if reached is None:
            break
        anchor = max(previous + 1, reached)
        if anchor > epsilon.upto:
            break
        anchors.append(anchor)
        previous = anchor

    if not anchors or (count is not None and len(anchors) < count):
        wanted = count if count is not None else 1
        raise InvalidInputError(
            f"Epsilon table too short: produced {len(anchors)} of {wanted} anchors"
        )
    logger.info(f"Constructed {len(anchors)} sparse anchors up to {epsilon.upto}")
    return SparseConstructed(anchors=tuple(anchors))


def guarantee_violations(spec: SparseConstructed, epsilon: EpsilonTable) -> list[int]:
    """Every n in [a_1, upto] where A(n) + 1 <= epsilon(n) fails."""
    return [
        n
        for n in range(spec.anchors[0], epsilon.upto + 1)
        if spec.count_upto(n) + 1 > epsilon.value_at(n)
    ]


def _read_int_lines(path: Path) -> list[list[int]]:
    try:
        text = path.read_text()
    except OSError as exc:
        raise InvalidInputError(f"Cannot read {path}: {exc.strerror}") from exc
    rows = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(field) for field in line.split()])
        except ValueError as exc:
            raise InvalidInputError(f"{path}:{number}: expected integers") from exc
    return rows


def read_epsilon_table(path: Path) -> EpsilonTable:
    rows = _read_int_lines(path)
    if any(len(row) != 2 for row in rows):
        raise InvalidInputError(f"{path}: each line must be 'threshold value'")
    return EpsilonTable(steps=tuple((row[0], row[1]) for row in rows))


def read_anchors(path: Path) -> list[int]:
    rows = _read_int_lines(path)
    if any(len(row) != 1 for row in rows):
        raise InvalidInputError(f"{path}: each line must hold one anchor")
    return [row[0] for row in rows]


def write_anchors(path: Path, anchors: tuple[int, ...]) -> None:
    path.write_text("".join(f"{anchor}\n" for anchor in anchors))
