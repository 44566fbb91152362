"""Hypothesis strategies shared by the test modules."""

from hypothesis import assume
from hypothesis import strategies as st

from inconic.kernel import GeometryError, HPoint, TriangleRef

coord = st.integers(min_value=-50, max_value=50)
nonzero = st.integers(min_value=-30, max_value=30).filter(bool)


@st.composite
def triangles(draw, shape="any"):
    pts = draw(st.lists(st.tuples(coord, coord), min_size=3, max_size=3))
    try:
        t = TriangleRef.from_points(pts)
    except GeometryError:
        assume(False)
    if shape == "acute":
        assume(t.is_acute())
    elif shape == "non-right":
        assume(not t.is_right())
    return t


@st.composite
def points(draw, finite=False):
    c = draw(st.tuples(coord, coord, coord).filter(any))
    if finite:
        assume(sum(c) != 0)
    return HPoint(c)


@st.composite
def proper_points(draw):
    """All coordinates nonzero, so valid as perspectors."""
    return HPoint(draw(st.tuples(nonzero, nonzero, nonzero)))
