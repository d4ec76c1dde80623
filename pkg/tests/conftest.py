import random

import pytest

ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def acceptance_log(request):
    return request.config.stash.setdefault(ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: (int(s.split()[1].rstrip(":").split("-")[0]), s)):
            terminalreporter.write_line(line)
