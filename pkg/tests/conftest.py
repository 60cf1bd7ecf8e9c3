import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from reporting import LINES  # noqa: E402
from weylgroupoid import BUILTIN_NAMES, groupoid  # noqa: E402


@pytest.fixture(scope="session")
def groupoids():
    return {name: groupoid(name) for name in BUILTIN_NAMES}


def pytest_terminal_summary(terminalreporter):
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(LINES):
            terminalreporter.write_line(line)
