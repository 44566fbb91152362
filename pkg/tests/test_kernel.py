from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from inconic.kernel import (
    CENTROID,
    SIDE_BC,
    GeometryError,
    HLine,
    HPoint,
    IdenticalLines,
    IdenticalPoints,
    PointAtInfinity,
    TriangleRef,
    DegenerateTriangle,
    bary_line_to_cartesian,
    bary_to_cartesian,
    cartesian_line_to_bary,
    cartesian_to_bary,
    collinear,
    concurrent,
    join,
    line_at_infinity,
    meet,
    midpoint,
    normalize,
    parallel_through,
    reflect,
)
from strategies import coord, points, triangles


class TestCanonicalForm:
    def test_scale_invariance(self):
        assert HPoint(2, 1, 1) == HPoint(4, 2, 2) == HPoint(-6, -3, -3)

    def test_rationals_are_cleared(self):
        p = HPoint("1/2", Fraction(1, 4), "1/4")
        assert p.coords == (2, 1, 1)

    def test_leading_coordinate_positive(self):
        assert HPoint(0, -3, 6).coords == (0, 1, -2)

    def test_zero_triple_rejected(self):
        with pytest.raises(GeometryError):
            HPoint(0, 0, 0)

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            HPoint(0.5, 1, 1)

    def test_point_and_line_never_equal(self):
        assert HPoint(1, 0, 0) != HLine(1, 0, 0)

    @given(points(), st.integers(min_value=-9, max_value=9).filter(bool))
    def test_projective_equality_is_scale_free(self, p, k):
        assert HPoint(k * c for c in p.coords) == p


class TestJoinMeet:
    def test_side_ab(self):
        assert join(HPoint(1, 0, 0), HPoint(0, 1, 0)) == HLine(0, 0, 1)

    def test_median_through_a(self):
        assert join(HPoint(1, 1, 1), HPoint(1, 0, 0)) == HLine(0, 1, -1)

    def test_join_same_point(self):
        with pytest.raises(IdenticalPoints):
            join(HPoint(1, 2, 3), HPoint(2, 4, 6))

    def test_meet_sides(self):
        assert meet(HLine(0, 0, 1), HLine(0, 1, 0)) == HPoint(1, 0, 0)

    def test_medians_meet_at_centroid(self):
        assert meet(HLine(0, 1, -1), HLine(1, 0, -1)) == HPoint(1, 1, 1)

    def test_meet_same_line(self):
        with pytest.raises(IdenticalLines):
            meet(HLine(1, 2, 3), HLine(1, 2, 3))

    def test_parallel_lines_meet_at_infinity(self, ref_triangle):
        # y = 0 and y = 1
        l1 = cartesian_line_to_bary(ref_triangle, 0, 1, 0)
        l2 = cartesian_line_to_bary(ref_triangle, 0, 1, -1)
        assert meet(l1, l2).weight == 0

    @given(points(), points(), points())
    def test_duality(self, p, q, r):
        assume(not collinear(p, q, r))
        assert meet(join(p, q), join(p, r)) == p

    @given(points(), points())
    def test_join_is_incident(self, p, q):
        assume(p != q)
        line = join(p, q)
        assert line.contains(p) and line.contains(q)


class TestIncidence:
    def test_collinear_on_ab(self):
        assert collinear(HPoint(1, 0, 0), HPoint(0, 1, 0), HPoint(1, 1, 0))

    def test_vertices_not_collinear(self):
        assert not collinear(HPoint(1, 0, 0), HPoint(0, 1, 0), HPoint(0, 0, 1))

    def test_medians_concurrent(self):
        assert concurrent(HLine(0, 1, -1), HLine(1, 0, -1), HLine(1, -1, 0))

    def test_line_at_infinity(self):
        linf = line_at_infinity()
        assert linf == HLine(1, 1, 1)
        assert linf.contains(HPoint(1, -1, 0))
        assert linf.contains(HPoint(0, 1, -1))
        assert not linf.contains(HPoint(1, 1, 1))


class TestAffineHelpers:
    def test_normalize(self):
        assert normalize(HPoint(2, 1, 1)) == (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4))
        assert normalize(HPoint(1, 1, 1)) == (Fraction(1, 3),) * 3

    def test_normalize_at_infinity(self):
        with pytest.raises(PointAtInfinity):
            normalize(HPoint(1, -1, 0))

    def test_midpoint_of_ab(self):
        assert midpoint(HPoint(1, 0, 0), HPoint(0, 1, 0)) == HPoint(1, 1, 0)

    def test_reflect_vertex_in_side_midpoint(self):
        assert reflect(HPoint(1, 0, 0), HPoint(1, 1, 0)) == HPoint(0, 1, 0)

    def test_reflect_in_itself(self):
        p = HPoint(3, -1, 5)
        assert reflect(p, p) == p

    def test_midpoint_at_infinity(self):
        with pytest.raises(PointAtInfinity):
            midpoint(HPoint(1, -1, 0), HPoint(1, 0, 0))

    @given(points(finite=True))
    def test_normalize_idempotent(self, p):
        n = normalize(p)
        assert HPoint(n) == p
        assert normalize(HPoint(n)) == n

    @given(points(finite=True), points(finite=True))
    def test_midpoint_symmetric(self, p, q):
        assert midpoint(p, q) == midpoint(q, p)

    @given(points(finite=True), points(finite=True))
    def test_reflect_involution(self, p, m):
        assert reflect(reflect(p, m), m) == p

    @given(points(finite=True), points(finite=True))
    def test_midpoint_matches_normalized_average(self, p, q):
        a, b = normalize(p), normalize(q)
        assert normalize(midpoint(p, q)) == tuple((x + y) / 2 for x, y in zip(a, b))


class TestCartesian:
    def test_centroid(self, ref_triangle):
        assert bary_to_cartesian(ref_triangle, CENTROID) == (Fraction(5, 3), Fraction(1))

    def test_vertices(self, ref_triangle):
        assert cartesian_to_bary(ref_triangle, (0, 0)) == HPoint(1, 0, 0)
        assert cartesian_to_bary(ref_triangle, (4, 0)) == HPoint(0, 1, 0)
        assert cartesian_to_bary(ref_triangle, (1, 3)) == HPoint(0, 0, 1)

    @given(triangles(), coord, coord, st.integers(1, 9))
    def test_round_trip(self, t, x, y, d):
        p = (Fraction(x, d), Fraction(y, d))
        assert bary_to_cartesian(t, cartesian_to_bary(t, p)) == p

    def test_degenerate_triangle(self):
        with pytest.raises(DegenerateTriangle):
            TriangleRef((0, 0), (1, 1), (2, 2))

    def test_squared_sides(self, ref_triangle):
        assert ref_triangle.squared_sides == (18, 10, 16)
        assert ref_triangle.is_acute()

    def test_right_and_obtuse(self):
        assert TriangleRef((0, 0), (2, 0), (1, 1)).is_right()
        assert TriangleRef((0, 0), (10, 0), (1, 1)).is_obtuse()

    @given(triangles(), coord, coord, coord)
    def test_line_conversion_round_trip(self, t, u, v, w):
        assume(u or v)
        line = cartesian_line_to_bary(t, u, v, w)
        back = bary_line_to_cartesian(t, line)
        assert HLine(back) == HLine(u, v, w)


class TestParallelThrough:
    def test_parallel_to_bc_through_a(self, ref_triangle):
        line = parallel_through(HPoint(1, 0, 0), SIDE_BC)
        u, v, _ = bary_line_to_cartesian(ref_triangle, line)
        # slope oracle: BC runs from (4,0) to (1,3), direction (-3, 3)
        assert u * -3 + v * 3 == 0
        assert line.contains(HPoint(1, 0, 0))

    def test_point_on_line(self):
        p = HPoint(0, 2, 5)
        assert parallel_through(p, SIDE_BC) == SIDE_BC

    def test_parallel_to_line_at_infinity(self):
        with pytest.raises(IdenticalLines):
            parallel_through(HPoint(1, 2, 3), line_at_infinity())

    @given(triangles(), points(finite=True), points(), points())
    def test_cartesian_slope_oracle(self, t, p, q, r):
        assume(q != r)
        line = join(q, r)
        assume(line != line_at_infinity())
        par = parallel_through(p, line)
        u1, v1, _ = bary_line_to_cartesian(t, line)
        u2, v2, _ = bary_line_to_cartesian(t, par)
        assert u1 * v2 - u2 * v1 == 0
        assert par.contains(p)
