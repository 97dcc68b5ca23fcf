import pytest
from hypothesis import settings, strategies as st

from stoimenow.matchings import stoimenow_matchings
from stoimenow.posets import enumerate_posets
from stoimenow.sequences import enumerate_ascent_sequences

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def stoimenow_matching(max_n: int = 6):
    """Uniform over M_n for a random n <= max_n."""
    return st.integers(0, max_n).flatmap(lambda n: st.sampled_from(stoimenow_matchings(n)))


def interval_order(max_n: int = 6):
    return st.integers(1, max_n).flatmap(lambda n: st.sampled_from(enumerate_posets(n)))


def ascent_sequence(max_n: int = 7):
    return st.integers(1, max_n).flatmap(lambda n: st.sampled_from(list(enumerate_ascent_sequences(n))))


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
