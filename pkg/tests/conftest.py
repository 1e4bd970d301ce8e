from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from golden import STARS
from polytropes import Polytrope, TropicalMatrix, kleene_star

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SQUARE = [[0, 1, 1], [1, 0, 1], [0, 0, 0]]
# apex (0, 1, 1) sits on four facets
NON_SIMPLE_3D = [[0, 0, 0, 1], [1, 0, 0, 1], [1, 1, 0, 2], [0, 0, 0, 0]]


@pytest.fixture(scope="session")
def golden():
    return {name: Polytrope(TropicalMatrix.from_rows(m)) for name, m in STARS.items()}


@pytest.fixture
def square():
    return Polytrope(TropicalMatrix.from_rows(SQUARE))


@pytest.fixture
def non_simple():
    return Polytrope(TropicalMatrix.from_rows(NON_SIMPLE_3D))


def fractions(lo=-20, hi=20, max_den=4):
    return st.builds(Fraction, st.integers(lo, hi), st.integers(1, max_den))


@st.composite
def square_matrices(draw, n=None, lo=0, hi=20, max_den=1):
    n = n if n is not None else draw(st.integers(1, 5))
    vals = fractions(lo, hi, max_den)
    return TropicalMatrix.from_rows([[draw(vals) for _ in range(n)] for _ in range(n)])


@st.composite
def polytropes(draw, dims=(2, 3), lo=0, hi=12, max_den=1):
    """Closure of a random nonnegative matrix with zero diagonal and last row."""
    d = draw(st.sampled_from(dims))
    n = d + 1
    vals = fractions(lo, hi, max_den)
    rows = [[Fraction(0) if i == j else draw(vals) for j in range(n)] for i in range(d)]
    rows.append([0] * n)
    return Polytrope(kleene_star(TropicalMatrix.from_rows(rows)))


# acceptance lines collected by test_acceptance and echoed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
