import itertools

import pytest


def brute_bounded_count(caps, m):
    """Count solutions by listing every tuple under the caps."""
    if m < 0:
        return 0
    return sum(1 for xs in itertools.product(*(range(c + 1) for c in caps)) if sum(xs) == m)


def brute_subsums(caps, i):
    return sorted(sum(caps[j] for j in idx) for idx in itertools.combinations(range(len(caps)), i))


@pytest.fixture
def brute_count():
    return brute_bounded_count


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
