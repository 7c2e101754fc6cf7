from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("finring", deadline=None, max_examples=60)
settings.load_profile("finring")


@pytest.fixture(scope="session")
def ring_cache():
    from finring.claims import RingCache

    return RingCache()


@pytest.fixture(scope="session")
def corpus(ring_cache):
    from finring.claims import default_corpus

    return default_corpus(cache=ring_cache)


@pytest.fixture(scope="session")
def corpus_report(corpus, ring_cache):
    from finring.claims import run_claims

    return run_claims(corpus, cache=ring_cache)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
