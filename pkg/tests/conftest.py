from __future__ import annotations

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from f2sym.involution import OmegaTable  # noqa: E402
from f2sym.verifier import GradedIdealFamily  # noqa: E402


@pytest.fixture(scope="session")
def table12() -> OmegaTable:
    return OmegaTable(12)


@pytest.fixture(scope="session")
def family12(table12) -> GradedIdealFamily:
    return GradedIdealFamily(table12)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
