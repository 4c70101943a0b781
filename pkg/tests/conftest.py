import pytest
from hypothesis import settings, strategies as st

from schurmin.coloring import RColoring

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    """Collects one summary line per acceptance criterion."""
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def colorings(draw, min_n=0, max_n=60, r=None):
    palette = draw(st.integers(2, 4)) if r is None else r
    colors = draw(st.lists(st.integers(0, palette - 1), min_size=min_n, max_size=max_n))
    return RColoring(len(colors), palette, tuple(colors))


def bit_colorings(min_n=0, max_n=60):
    return colorings(min_n=min_n, max_n=max_n, r=2)
