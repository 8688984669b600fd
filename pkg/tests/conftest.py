import pytest
from hypothesis import strategies as st

from insdel.core import ContextRule, Kind, Target
from insdel.grammars import BUNDLED, bundled

SMALL_ALPHABET = ("a", "b", "c")

symbols = st.sampled_from(SMALL_ALPHABET)
words = st.lists(symbols, max_size=7).map(tuple)
short_words = st.lists(symbols, max_size=2).map(tuple)
bodies = st.lists(symbols, min_size=1, max_size=3).map(tuple)
targets = st.sampled_from(list(Target))


@st.composite
def rules(draw, kind=None, target=None):
    kind = kind or draw(st.sampled_from(list(Kind)))
    return ContextRule(kind, draw(short_words), draw(bodies), draw(short_words),
                       target or draw(targets))


@pytest.fixture(params=BUNDLED)
def grammar(request):
    return bundled(request.param)


@pytest.fixture
def g_ab():
    return bundled("g_ab")


@pytest.fixture
def g_ctx():
    return bundled("g_ctx")


@pytest.fixture
def g_eps():
    return bundled("g_eps")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
