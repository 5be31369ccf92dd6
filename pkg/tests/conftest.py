from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from ncfrieze.quaternion import Quaternion
from ncfrieze.ratmatrix import RatMatrix
from ncfrieze.rings import Ring

FIXTURES = Path(__file__).parent / "fixtures"

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def quaternions(coeff=small):
    return st.builds(Quaternion, coeff, coeff, coeff, coeff)


def matrices(n, coeff=small):
    return st.lists(st.lists(coeff, min_size=n, max_size=n), min_size=n, max_size=n).map(RatMatrix)


def elements(ring):
    if ring.kind == "rational":
        return small
    if ring.kind == "quaternion":
        return quaternions()
    return matrices(ring.dim)


BACKENDS = [Ring.rational(), Ring.quaternion(), Ring.matrix(2), Ring.matrix(3)]


@pytest.fixture
def fixtures():
    return FIXTURES


@pytest.fixture
def H():
    return Ring.quaternion()


@pytest.fixture
def Q():
    return Ring.rational()


def q(text):
    return Ring.quaternion().parse(text)


def frac(s):
    return Fraction(s)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
