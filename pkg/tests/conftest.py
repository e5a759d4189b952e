import pytest

from congruent.oracle import random_triple
from congruent.triple import psi

# criterion id -> (description, passed); filled by test_acceptance
ACCEPTANCE_RESULTS = {}


@pytest.fixture(scope="session")
def oracle_triples():
    """1000 reproducible triples from the brute-force generator, mixed signs."""
    return [random_triple((1, 1000), 40, seed) for seed in range(1000)]


@pytest.fixture(scope="session")
def oracle_points(oracle_triples):
    """(point, A) images of the oracle triples."""
    return [psi(t) for t in oracle_triples]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        desc, ok, detail = ACCEPTANCE_RESULTS[key]
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {key:>2}: {desc}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
