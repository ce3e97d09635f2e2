import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ballops import PointSet, point
from ballops.random_instances import DIAMOND, HEXAGON, OCTAGON, SQUARE, named_plane, random_plane
from ballops.scalar import Q

settings.register_profile("ballops", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ballops")

LINF = named_plane(SQUARE)
L1 = named_plane(DIAMOND)
HEX = named_plane(HEXAGON)
OCT = named_plane(OCTAGON)


def P(x, y):
    return point(x, y)


def pts(*pairs):
    return [P(x, y) for x, y in pairs]


def kset(plane, *pairs):
    return PointSet(plane, pts(*pairs))


rationals = st.fractions(min_value=-8, max_value=8, max_denominator=12).map(lambda f: Q(f.numerator, f.denominator))
points = st.builds(lambda x, y: P(x, y), rationals, rationals)
planes = st.integers(0, 10 ** 6).map(lambda s: random_plane(random.Random(s)))


@pytest.fixture
def linf():
    return LINF


@pytest.fixture
def l1():
    return L1


ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
