import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from common import CATEGORIES  # noqa: E402


@pytest.fixture(params=CATEGORIES, ids=lambda c: c.short)
def category(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
