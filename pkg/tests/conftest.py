import pytest
from hypothesis import strategies as st

from hibireg.poset import Poset

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    """Collect one PASS/FAIL line per acceptance criterion for the summary."""
    return _ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def posets(draw, min_size=1, max_size=6):
    """Random posets: upper-triangular relations, then a random relabeling."""
    n = draw(st.integers(min_size, max_size))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    perm = draw(st.permutations(range(n)))
    rel = [(perm[a], perm[b]) for (a, b), keep in zip(pairs, chosen) if keep]
    return Poset([f"p{i + 1}" for i in range(n)], rel)
