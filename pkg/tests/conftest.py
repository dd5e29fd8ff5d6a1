from __future__ import annotations

from pathlib import Path

import pytest

from treeconn import _kernel

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []

BACKENDS = ["python"] + (["cython"] if _kernel.compiled_pack is not None else [])


@pytest.fixture(params=BACKENDS)
def backend(request) -> str:
    return request.param


@pytest.fixture
def fixture_dir() -> Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
