from itertools import product

import pytest
from hypothesis import settings, strategies as st

from syncideal.core import Dfa

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def all_words(max_len, min_len=0):
    for n in range(min_len, max_len + 1):
        for tup in product("ab", repeat=n):
            yield "".join(tup)


@st.composite
def dfas(draw, min_states=1, max_states=6):
    m = draw(st.integers(min_states, max_states))
    cell = st.integers(0, m - 1)
    rows = draw(st.lists(st.tuples(cell, cell), min_size=m, max_size=m))
    return Dfa(tuple(rows))


@st.composite
def acceptors(draw, max_states=5):
    d = draw(dfas(max_states=max_states))
    initial = draw(st.integers(0, d.state_count - 1))
    finals = draw(st.frozensets(st.integers(0, d.state_count - 1)))
    return Dfa(d.delta, initial, finals)


words = st.text(alphabet="ab", max_size=12)
nonempty_words = st.text(alphabet="ab", min_size=1, max_size=12)


@pytest.fixture
def permutation_dfa():
    # a and b both swap the two states: nothing ever merges
    return Dfa(((1, 1), (0, 0)))


# -- acceptance summary ------------------------------------------------------

_CRITERIA: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (report.when != "call" and not report.failed):
        return
    num, title = marker.args
    previous = _CRITERIA.get(num, ("PASS", title))[0]
    status = "PASS" if report.passed and previous == "PASS" else "FAIL"
    _CRITERIA[num] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        status, title = _CRITERIA[num]
        terminalreporter.write_line(f"{status}  criterion {num}: {title}")
