import itertools
import sys

import pytest


def iterate(seeds, count, lag=3):
    """Plain list iteration of T(k) = T(k-1) + T(k-lag); independent of the package tables."""
    out = list(seeds)
    while len(out) < count:
        out.append(out[-1] + out[-lag])
    return out[:count]


def brute_force_sums(n, terms, gap):
    """Every index subset with pairwise gaps >= gap whose terms sum to n, via itertools."""
    found = []
    idx = range(len(terms))
    for r in range(1, len(terms) + 1):
        for combo in itertools.combinations(idx, r):
            if all(b - a >= gap for a, b in zip(combo, combo[1:])) and sum(terms[i] for i in combo) == n:
                found.append(combo)
    return sorted(found)


@pytest.fixture(scope="session")
def narayana_terms():
    return iterate((1, 1, 1), 120)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.format_results():
        terminalreporter.write_line(line)
