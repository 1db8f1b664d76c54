from functools import lru_cache

import pytest

from shiwalls.partitions import cores_up_to


@lru_cache(maxsize=None)
def cores(n, max_size):
    return tuple(cores_up_to(n, max_size))


@pytest.fixture(scope="session")
def small_cores():
    """n -> every n-core with at most 20 boxes, for n = 2..6."""
    return {n: cores(n, 20) for n in range(2, 7)}


def pytest_terminal_summary(terminalreporter):
    lines = [
        value
        for key in ("passed", "failed")
        for report in terminalreporter.stats.get(key, [])
        if report.when == "call"
        for name, value in report.user_properties
        if name == "acceptance"
    ]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
