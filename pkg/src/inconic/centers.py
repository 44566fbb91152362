"""Triangle centres and point maps used by the inconic theorems.

Most centres come in two flavours: a closed-form barycentric formula (the
fast path used elsewhere) and a synthetic construction by joins and meets.
The test-suite checks that both agree exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Tuple

from .kernel import (
    CENTROID,
    SIDES,
    VERTICES,
    GeometryError,
    HLine,
    HPoint,
    PointAtInfinity,
    TriangleRef,
    cartesian_line_to_bary,
    cartesian_to_bary,
    join,
    meet,
    midpoint,
    normalize,
    parallel_through,
    reflect,
)

Triple = Tuple[HPoint, HPoint, HPoint]


class DegeneratePerspector(GeometryError):
    """The point lies on a side line, so its cevians are not proper."""


class DegenerateOrthic(GeometryError):
    """Right triangle: the orthocentre is a vertex and the orthic triangle collapses."""


class NoValidPerspector(GeometryError):
    pass


SIDE_NAMES = {"BC": 0, "CA": 1, "AB": 2}


def _require_proper(p: HPoint) -> None:
    if 0 in p.coords:
        raise DegeneratePerspector(f"{p} lies on a side line")


def side_midpoints() -> Triple:
    """Midpoints of BC, CA, AB (the medial triangle)."""
    return (HPoint(0, 1, 1), HPoint(1, 0, 1), HPoint(1, 1, 0))


def cevian_feet(p: HPoint) -> Triple:
    _require_proper(p)
    x, y, z = p.coords
    return (HPoint(0, y, z), HPoint(x, 0, z), HPoint(x, y, 0))


def cevian_feet_by_construction(p: HPoint) -> Triple:
    _require_proper(p)
    return tuple(meet(join(v, p), side) for v, side in zip(VERTICES, SIDES))


def isotomic_conjugate(p: HPoint) -> HPoint:
    _require_proper(p)
    x, y, z = p.coords
    return HPoint(y * z, z * x, x * y)


def isotomic_conjugate_by_construction(p: HPoint) -> HPoint:
    """Reflect the cevian feet in the side midpoints and intersect the new cevians."""
    feet = cevian_feet_by_construction(p)
    mids = side_midpoints()
    cevians = [join(v, reflect(f, m)) for v, f, m in zip(VERTICES, feet, mids)]
    return meet(cevians[0], cevians[1])


def complement(p: HPoint) -> HPoint:
    """Image under the homothety about G with ratio -1/2.

    The linear form also fixes the line at infinity pointwise, so points at
    infinity are accepted and returned unchanged.
    """
    x, y, z = p.coords
    return HPoint(y + z, z + x, x + y)


def anticomplement(p: HPoint) -> HPoint:
    x, y, z = p.coords
    return HPoint(y + z - x, z + x - y, x + y - z)


def complement_by_vector(p: HPoint) -> HPoint:
    """``G + (-1/2)(P - G)`` on normalized coordinates."""
    g = normalize(CENTROID)
    q = normalize(p)
    half = Fraction(1, 2)
    return HPoint(gi - half * (qi - gi) for gi, qi in zip(g, q))


def perspector_from_center(center: HPoint) -> HPoint:
    """Perspector of the inconic centred at ``center``."""
    if not center.is_finite:
        raise PointAtInfinity(f"{center} lies on the line at infinity")
    ac = anticomplement(center)
    if 0 in ac.coords:
        raise NoValidPerspector(f"anticomplement {ac} of {center} lies on a side line")
    return isotomic_conjugate(ac)


def orthocenter(t: TriangleRef) -> HPoint:
    """``(S_B S_C : S_C S_A : S_A S_B)``; a vertex for right triangles."""
    sa, sb, sc = t.conway()
    return HPoint(sb * sc, sc * sa, sa * sb)


def altitude(t: TriangleRef, vertex: int) -> HLine:
    """Line through a vertex perpendicular to the opposite side, built in Cartesian terms."""
    pts = t.vertices
    v, p, q = pts[vertex], pts[(vertex + 1) % 3], pts[(vertex + 2) % 3]
    nx, ny = q[0] - p[0], q[1] - p[1]
    return cartesian_line_to_bary(t, nx, ny, -(nx * v[0] + ny * v[1]))


def orthocenter_by_altitudes(t: TriangleRef) -> HPoint:
    return meet(altitude(t, 0), altitude(t, 1))


def _perpendicular_foot(v, p, q):
    dx, dy = q[0] - p[0], q[1] - p[1]
    s = ((v[0] - p[0]) * dx + (v[1] - p[1]) * dy) / (dx * dx + dy * dy)
    return (p[0] + s * dx, p[1] + s * dy)


def altitude_feet(t: TriangleRef) -> Triple:
    if t.is_right():
        raise DegenerateOrthic("right triangle: orthocentre coincides with a vertex")
    return cevian_feet(orthocenter(t))


def altitude_feet_by_projection(t: TriangleRef) -> Triple:
    pts = t.vertices
    return tuple(
        cartesian_to_bary(t, _perpendicular_foot(pts[i], pts[(i + 1) % 3], pts[(i + 2) % 3]))
        for i in range(3)
    )


def orthic_midpoints(t: TriangleRef) -> Triple:
    """Midpoints of the orthic sides opposite ``A_h``, ``B_h``, ``C_h``.

    The side ``B_h C_h`` is antiparallel to ``BC``; its midpoint lies on the
    symmedian from ``A``.
    """
    ha, hb, hc = altitude_feet(t)
    return (midpoint(hb, hc), midpoint(hc, ha), midpoint(ha, hb))


def altitude_midpoints(t: TriangleRef) -> Triple:
    """Midpoints of the altitude segments ``A A_h`` etc."""
    feet = altitude_feet(t)
    return tuple(midpoint(v, f) for v, f in zip(VERTICES, feet))


def symmedian_point(t: TriangleRef) -> HPoint:
    return HPoint(t.a2, t.b2, t.c2)


def symmedian_point_by_orthic(t: TriangleRef) -> HPoint:
    """Meet of the lines joining each vertex to the midpoint of the opposite orthic side."""
    am, bm, _ = orthic_midpoints(t)
    return meet(join(VERTICES[0], am), join(VERTICES[1], bm))


def circumcenter_cartesian(t: TriangleRef):
    (ax, ay), (bx, by), (cx, cy) = t.vertices
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    a = ax * ax + ay * ay
    b = bx * bx + by * by
    c = cx * cx + cy * cy
    ux = (a * (by - cy) + b * (cy - ay) + c * (ay - by)) / d
    uy = (a * (cx - bx) + b * (ax - cx) + c * (bx - ax)) / d
    return (ux, uy)


def circumcenter(t: TriangleRef) -> HPoint:
    return cartesian_to_bary(t, circumcenter_cartesian(t))


def circumcircle_tangent(t: TriangleRef, vertex: int) -> HLine:
    """Tangent to the circumcircle at a vertex: perpendicular to the radius there."""
    ox, oy = circumcenter_cartesian(t)
    vx, vy = t.vertices[vertex]
    nx, ny = vx - ox, vy - oy
    return cartesian_line_to_bary(t, nx, ny, -(nx * vx + ny * vy))


def antiparallel_through(t: TriangleRef, p: HPoint, side: str) -> HLine:
    """Line through ``p`` antiparallel to ``side`` (one of ``"BC"``, ``"CA"``, ``"AB"``)."""
    return parallel_through(p, circumcircle_tangent(t, SIDE_NAMES[side]))


def incenter(sides: Tuple[Fraction, Fraction, Fraction]) -> HPoint:
    """Incentre from rational side lengths ``(a, b, c)``; used only by tests."""
    return HPoint(*sides)


def gergonne_point(sides: Tuple[Fraction, Fraction, Fraction]) -> HPoint:
    a, b, c = (Fraction(s) for s in sides)
    s = (a + b + c) / 2
    return HPoint(1 / (s - a), 1 / (s - b), 1 / (s - c))

