from functools import lru_cache

import pytest

from sumcolor.generators import corpus


@lru_cache(maxsize=None)
def corpus_list(n_min: int, n_max: int):
    return tuple(corpus(n_min, n_max))


@pytest.fixture(scope="session")
def small_corpus():
    """Connected graphs on 3..6 vertices."""
    return corpus_list(3, 6)


@pytest.fixture(scope="session")
def full_corpus():
    """Connected graphs on 3..8 vertices (about 12k graphs)."""
    return corpus_list(3, 8)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
