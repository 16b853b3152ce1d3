import random

import pytest
from hypothesis import settings, strategies as st

from vsgroups.words import Family, Gen, Word

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def braid_words(draw, n=None, max_len=12, families="stv"):
    n = n or draw(st.integers(2, 5))
    fams = [Family("stv".index(c)) for c in families]
    letters = draw(st.lists(st.tuples(st.sampled_from(fams), st.integers(1, n - 1), st.sampled_from((1, -1))),
                            max_size=max_len))
    return Word.of([(Gen(f, i), e) for f, i, e in letters], n)


@pytest.fixture
def rng():
    return random.Random(1234)


# acceptance lines collected by test_acceptance.py, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for i in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[i])
