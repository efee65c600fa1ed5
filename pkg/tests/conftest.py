import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from msl.core import Multisegment, Segment, parse_multisegment

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def segments(draw, lo=0, hi=6):
    a = draw(st.integers(lo, hi))
    b = draw(st.integers(a, hi))
    return Segment(a, b)


def multisegments(max_size=4, lo=0, hi=6, min_size=0):
    return st.lists(segments(lo, hi), min_size=min_size, max_size=max_size).map(Multisegment)


@pytest.fixture
def leclerc():
    return parse_multisegment("[4,5]+[2,4]+[3,3]+[1,2]")
