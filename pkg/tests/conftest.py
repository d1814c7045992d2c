import pytest
from hypothesis import strategies as st

from mukai_fm.lattice import Kind, MukaiVector, Surface

K3_12 = Surface(Kind.K3, 12)
AB_4 = Surface(Kind.ABELIAN, 4)


def vectors(bound=10**6):
    c = st.integers(-bound, bound)
    return st.builds(MukaiVector, c, c, c)


surfaces = st.builds(
    Surface,
    st.sampled_from(list(Kind)),
    st.integers(1, 500).map(lambda h: 2 * h),
)


def V(text):
    return MukaiVector.parse(text)


@pytest.fixture
def k3_12():
    return K3_12


@pytest.fixture
def ab_4():
    return AB_4


# (criterion number, passed, detail), filled by test_acceptance.py
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
