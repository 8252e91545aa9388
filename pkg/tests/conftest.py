from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

P_GRID = [
    Fraction(1, 2),
    Fraction(1, 3),
    Fraction(1, 4),
    Fraction(2, 5),
    Fraction(9, 10),
    Fraction(1, 1000),
    Fraction(999, 1000),
]


@st.composite
def probabilities(draw, max_den=1000):
    """Rationals strictly inside (0, 1)."""
    den = draw(st.integers(min_value=2, max_value=max_den))
    num = draw(st.integers(min_value=1, max_value=den - 1))
    return Fraction(num, den)


@st.composite
def rationals(draw, bound=20, max_den=12):
    num = draw(st.integers(min_value=-bound * max_den, max_value=bound * max_den))
    den = draw(st.integers(min_value=1, max_value=max_den))
    return Fraction(num, den)


@pytest.fixture(params=P_GRID, ids=str)
def grid_p(request):
    return request.param


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance(request):
    """Record a one-line verdict for an acceptance criterion."""

    def record(label, ok, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f"  ({detail})" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
