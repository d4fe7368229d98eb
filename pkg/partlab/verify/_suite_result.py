from typing import Any

from pydantic import BaseModel, Field


class SuiteFailure(BaseModel):
    inputs: dict[str, Any]
    expected: str
    got: str


class SuiteResult(BaseModel):
    suite: str
    cases: int = 0
    failures: list[SuiteFailure] = Field(default_factory=list)
    onsets: dict[str, int] = Field(default_factory=dict)
    observations: dict[str, str] = Field(default_factory=dict)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures


class SuiteRecorder:
    """Accumulates cases, failures and observations while a suite runs."""

    def __init__(self, suite: str) -> None:
        self._result = SuiteResult(suite=suite)

    def check(self, holds: bool, inputs: dict[str, Any], expected: Any, got: Any) -> bool:
        self._result.cases += 1
        if not holds:
            self.fail(inputs, expected, got)
        return holds

    def fail(self, inputs: dict[str, Any], expected: Any, got: Any) -> None:
        self._result.failures.append(
            SuiteFailure(inputs=inputs, expected=str(expected), got=str(got))
        )

    def onset(self, bound_id: str, n: int) -> None:
        self._result.onsets[bound_id] = n

    def observe(self, key: str, value: Any) -> None:
        self._result.observations[key] = str(value)

    def result(self) -> SuiteResult:
        return self._result


class OnsetTracker:
    """Smallest tested n from which an inequality held through the end of the range."""

    def __init__(self, start: int) -> None:
        self._onset = start

    def record(self, n: int, holds: bool) -> None:
        if not holds:
            self._onset = n + 1

    @property
    def onset(self) -> int:
        return self._onset
