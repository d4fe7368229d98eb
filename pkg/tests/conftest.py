"""Shared test fixtures and configuration."""

import json
from pathlib import Path
from typing import Callable

import pytest
from click.testing import CliRunner, Result

from partlab.main import cli
from partlab.setspec import NATURALS, AllFrom, IntegerSetSpec, SetKind, parse_set_spec


@pytest.fixture(scope="session")
def runner() -> CliRunner:
    """Click test runner, the command-line counterpart of an HTTP test client."""
    return CliRunner()


@pytest.fixture(scope="function")
def invoke(runner: CliRunner) -> Callable[..., Result]:
    """Run `partlab <args>` and return click's Result."""

    def _invoke(*args: str) -> Result:
        return runner.invoke(cli, list(args))

    return _invoke


@pytest.fixture(scope="function")
def invoke_json(invoke) -> Callable[..., tuple[int, object]]:
    """Run a command with --format json and decode its stdout."""

    def _invoke_json(*args: str) -> tuple[int, object]:
        result = invoke(*args, "--format", "json")
        payload = json.loads(result.stdout) if result.stdout.strip() else None
        return result.exit_code, payload

    return _invoke_json


@pytest.fixture(scope="session")
def all_parts() -> IntegerSetSpec:
    return AllFrom(start=1)


@pytest.fixture(scope="session")
def nat() -> IntegerSetSpec:
    return NATURALS


@pytest.fixture(scope="session")
def parts_of() -> Callable[[str], IntegerSetSpec]:
    """Parse a part-set spec."""
    return lambda text: parse_set_spec(text, SetKind.PARTS)


@pytest.fixture(scope="session")
def mults_of() -> Callable[[str], IntegerSetSpec]:
    """Parse a multiplicity-set spec."""
    return lambda text: parse_set_spec(text, SetKind.MULTS)


@pytest.fixture(scope="function")
def epsilon_file(tmp_path: Path) -> Path:
    """floor(lg lg x) tabulated to 2^16, in the sparse command's file format."""
    path = tmp_path / "epsilon.txt"
    path.write_text("# threshold value\n4 1\n16 2\n256 3\n65536 4\n")
    return path
