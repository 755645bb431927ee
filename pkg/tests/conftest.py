import random

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def record_criterion(request):
    """Store a (number, description, passed) line for the terminal summary."""
    lines = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])

    def record(number, description, passed):
        lines.append((number, description, passed))
        print("CRITERION %2d %s: %s" % (number, "PASS" if passed else "FAIL", description))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, passed in sorted(lines):
        terminalreporter.write_line("CRITERION %2d %s: %s" % (number, "PASS" if passed else "FAIL", description))


@pytest.fixture
def rng():
    return random.Random(12345)
