"""Conics as symmetric 3x3 integer matrices in barycentric coordinates.

A conic is the set ``{X : X^T M X = 0}``.  Matrices are kept up to scale in
canonical form, the same way points and lines are, so two conics are equal
exactly when their canonical entry tuples agree.  Poles use the adjugate
rather than the inverse to stay inside the integers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from . import centers
from .kernel import (
    CENTROID,
    SIDES,
    VERTICES,
    GeometryError,
    HLine,
    HPoint,
    TriangleRef,
    canonical_tuple,
    dot,
    join,
    line_at_infinity,
    meet,
    midpoint,
    normalize,
    parallel,
    reflect,
)

# upper-triangle order of the six independent entries
_ENTRY = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))
_INDEX = {}
for _k, (_i, _j) in enumerate(_ENTRY):
    _INDEX[(_i, _j)] = _INDEX[(_j, _i)] = _k


class DegenerateConic(GeometryError):
    pass


class CenterAtInfinity(GeometryError):
    """The conic is a parabola: its centre is a point at infinity."""


class PointNotOnConic(GeometryError):
    pass


class RankDeficient(GeometryError):
    pass


class NotAnEllipse(GeometryError):
    pass


class ConicClass(enum.Enum):
    ELLIPSE = "Ellipse"
    PARABOLA = "Parabola"
    HYPERBOLA = "Hyperbola"
    DEGENERATE = "Degenerate"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Conic:
    """Canonical upper-triangle entries ``(m00, m01, m02, m11, m12, m22)``."""

    entries: Tuple[int, ...]

    def __init__(self, entries: Sequence):
        if len(entries) != 6:
            raise TypeError("a conic has six independent entries")
        try:
            canon = canonical_tuple(entries)
        except GeometryError:
            raise DegenerateConic("zero matrix") from None
        object.__setattr__(self, "entries", canon)

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence]) -> "Conic":
        for i in range(3):
            for j in range(i):
                if m[i][j] != m[j][i]:
                    raise ValueError("conic matrix must be symmetric")
        return cls([m[i][j] for i, j in _ENTRY])

    @property
    def matrix(self) -> Tuple[Tuple[int, int, int], ...]:
        e = self.entries
        return ((e[0], e[1], e[2]), (e[1], e[3], e[4]), (e[2], e[4], e[5]))

    @property
    def det(self) -> int:
        (a, h, g), (_, b, f), (_, _, c) = self.matrix
        return a * b * c + 2 * f * g * h - a * f * f - b * g * g - c * h * h

    def adjugate(self) -> Tuple[Tuple[int, int, int], ...]:
        (a, h, g), (_, b, f), (_, _, c) = self.matrix
        return (
            (b * c - f * f, g * f - h * c, h * f - g * b),
            (g * f - h * c, a * c - g * g, g * h - a * f),
            (h * f - g * b, g * h - a * f, a * b - h * h),
        )

    def apply(self, v: Sequence[int]) -> Tuple[int, int, int]:
        return tuple(dot(row, v) for row in self.matrix)

    def form(self, p: Sequence[int], q: Sequence[int] | None = None) -> int:
        """Bilinear form ``p^T M q`` (quadratic form when ``q`` is omitted)."""
        return dot(p, self.apply(p if q is None else q))

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(v) for v in row) for row in self.matrix) + "]"


@dataclass(frozen=True)
class Hexagon:
    """Six vertices in cyclic order; opposite vertices are ``i`` and ``i + 3``."""

    vertices: Tuple[HPoint, ...]

    def __post_init__(self):
        if len(self.vertices) != 6:
            raise ValueError("a hexagon has six vertices")
        for i in range(6):
            if self.vertices[i] == self.vertices[(i + 1) % 6]:
                raise GeometryError(f"consecutive hexagon vertices {i} and {(i + 1) % 6} coincide")

    def sides(self) -> List[HLine]:
        v = self.vertices
        return [join(v[i], v[(i + 1) % 6]) for i in range(6)]

    def diagonals(self) -> List[HLine]:
        v = self.vertices
        return [join(v[i], v[i + 3]) for i in range(3)]

    def opposite_sides(self) -> List[Tuple[HLine, HLine]]:
        s = self.sides()
        return [(s[i], s[i + 3]) for i in range(3)]


def nullspace(rows: Sequence[Sequence]) -> List[List[Fraction]]:
    """Exact basis of the right null space by Gauss-Jordan elimination over Fractions."""
    m = [[Fraction(v) for v in row] for row in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def _incidence_row(p: Sequence[int]) -> List[int]:
    row = [0] * 6
    for i in range(3):
        for j in range(3):
            row[_INDEX[(i, j)]] += p[i] * p[j]
    return row


def _polar_rows(p: Sequence[int], skip: int) -> List[List[int]]:
    """Rows forcing ``(M p)_i = 0`` for ``i != skip``, i.e. polar of ``p`` proportional to the line ``e_skip``."""
    rows = []
    for i in range(3):
        if i == skip:
            continue
        row = [0] * 6
        for j in range(3):
            row[_INDEX[(i, j)]] += p[j]
        rows.append(row)
    return rows


def inconic_from_perspector(p: HPoint) -> Conic:
    """The conic tangent to each side line at the cevian foot of ``p`` on it.

    Solved from the tangency constraints, then re-checked exactly.
    """
    feet = centers.cevian_feet(p)
    rows = []
    for k, f in enumerate(feet):
        rows.append(_incidence_row(f.coords))
        rows.extend(_polar_rows(f.coords, k))
    basis = nullspace(rows)
    if len(basis) != 1:
        raise RankDeficient(f"tangency system for {p} has a {len(basis)}-dimensional solution space")
    conic = Conic(basis[0])
    for f, side in zip(feet, SIDES):
        if not on_conic(conic, f) or polar(conic, f) != side:
            raise GeometryError(f"constructed inconic of {p} is not tangent at {f}")
    return conic


def inconic_closed_form(p: HPoint) -> Conic:
    """``sum x^2/p^2 - 2 sum yz/(qr)``; faster equivalent of :func:`inconic_from_perspector`."""
    centers.cevian_feet(p)  # validates p
    u, v, w = (Fraction(1, c) for c in p.coords)
    return Conic([u * u, -u * v, -u * w, v * v, -v * w, w * w])


def steiner_inellipse() -> Conic:
    return inconic_from_perspector(CENTROID)


def steiner_circumellipse() -> Conic:
    """``yz + zx + xy = 0``: the circumconic centred at G."""
    return Conic([0, 1, 1, 0, 1, 0])


def orthic_conic(t: TriangleRef) -> Conic:
    return inconic_from_perspector(centers.orthocenter(t))


def circumcircle(t: TriangleRef) -> Conic:
    return Conic([0, t.c2, t.b2, 0, t.a2, 0])


def on_conic(c: Conic, p: HPoint) -> bool:
    return c.form(p.coords) == 0


def polar(c: Conic, p: HPoint) -> HLine:
    v = c.apply(p.coords)
    if v == (0, 0, 0):
        raise DegenerateConic(f"{p} is a singular point of the conic")
    return HLine(v)


def pole(c: Conic, line: HLine) -> HPoint:
    if c.det == 0:
        raise DegenerateConic("degenerate conics have no pole map")
    return HPoint(dot(row, line.coords) for row in c.adjugate())


def tangent_at(c: Conic, p: HPoint) -> HLine:
    if not on_conic(c, p):
        raise PointNotOnConic(f"{p} is not on the conic")
    return polar(c, p)


def is_tangent(c: Conic, line: HLine) -> bool:
    """A line touches a nondegenerate conic iff it lies on the dual conic."""
    adj = c.adjugate()
    return dot(line.coords, [dot(row, line.coords) for row in adj]) == 0


def tangency_point(c: Conic, line: HLine) -> HPoint:
    if not is_tangent(c, line):
        raise GeometryError(f"{line} is not tangent to the conic")
    return pole(c, line)


def conic_center(c: Conic) -> HPoint:
    """Pole of the line at infinity."""
    if c.det == 0:
        raise DegenerateConic("degenerate conic")
    center = pole(c, line_at_infinity())
    if not center.is_finite:
        raise CenterAtInfinity(f"parabola: centre {center} is at infinity")
    return center


def infinity_discriminant(c: Conic) -> int:
    """Discriminant of the form restricted to ``x + y + z = 0``, parametrized by ``(1,0,-1), (0,1,-1)``."""
    e1, e2 = (1, 0, -1), (0, 1, -1)
    alpha = c.form(e1)
    beta = c.form(e1, e2)
    gamma = c.form(e2)
    return beta * beta - alpha * gamma


def classify(c: Conic) -> ConicClass:
    if c.det == 0:
        return ConicClass.DEGENERATE
    d = infinity_discriminant(c)
    if d < 0:
        return ConicClass.ELLIPSE
    if d == 0:
        return ConicClass.PARABOLA
    return ConicClass.HYPERBOLA


def conic_through_5(points: Sequence[HPoint]) -> Conic:
    if len(points) != 5:
        raise ValueError("need exactly five points")
    basis = nullspace([_incidence_row(p.coords) for p in points])
    if len(basis) != 1:
        raise RankDeficient("five points do not determine a unique conic")
    return Conic(basis[0])


def second_intersection(c: Conic, p: HPoint, direction: HPoint) -> HPoint:
    """Other intersection with the conic of the line through ``p`` (on the conic) and ``direction``.

    On ``X = s p + t d`` the form reduces to ``t (2 s B(p, d) + t Q(d))``.
    """
    if not on_conic(c, p):
        raise PointNotOnConic(f"{p} is not on the conic")
    b = c.form(p.coords, direction.coords)
    q = c.form(direction.coords)
    if b == 0:
        raise GeometryError("line is tangent at the base point")
    return HPoint(q * pi - 2 * b * di for pi, di in zip(p, direction))


def center_by_contact_chords(p: HPoint) -> Tuple[List[HLine], HPoint]:
    """Lines joining each vertex to the midpoint of the opposite contact-triangle side, and their meet."""
    fa, fb, fc = centers.cevian_feet(p)
    lines = [
        join(VERTICES[0], midpoint(fb, fc)),
        join(VERTICES[1], midpoint(fc, fa)),
        join(VERTICES[2], midpoint(fa, fb)),
    ]
    return lines, meet(lines[0], lines[1])


def conic_to_cartesian(t: TriangleRef, c: Conic) -> Tuple[Tuple[Fraction, ...], ...]:
    """Matrix ``Q`` with ``(X, Y, 1) Q (X, Y, 1)^T = 0`` describing the same curve in the plane.

    Barycentrics are ``N (X, Y, 1)`` with ``N`` the inverse of the vertex matrix,
    hence ``Q = N^T M N``.
    """
    (ax, ay), (bx, by), (cx, cy) = t.vertices
    d = t.area2
    n = (
        (by - cy, cx - bx, bx * cy - cx * by),
        (cy - ay, ax - cx, cx * ay - ax * cy),
        (ay - by, bx - ax, ax * by - bx * ay),
    )
    n = tuple(tuple(v / d for v in row) for row in n)
    m = c.matrix
    mn = [[sum(m[i][k] * n[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    return tuple(tuple(sum(n[k][i] * mn[k][j] for k in range(3)) for j in range(3)) for i in range(3))


def _side_parameter(side: int, p: HPoint) -> Fraction:
    """Position along the boundary walk A->B->C->A on side line ``side`` (0=BC, 1=CA, 2=AB)."""
    x, y, z = normalize(p)
    return {2: y, 0: z, 1: x}[side]


def _walk_boundary(points_on_sides: dict) -> Hexagon:
    ordered = []
    for side in (2, 0, 1):
        ordered.extend(sorted(points_on_sides[side], key=lambda q: _side_parameter(side, q)))
    return Hexagon(tuple(ordered))


def lemoine_hexagon(t: TriangleRef) -> Hexagon:
    """Where the antiparallels through the symmedian point cut the side lines.

    Vertices are listed walking the boundary A->B->C, so vertex ``i`` and
    ``i + 3`` lie on the same antiparallel.
    """
    k = centers.symmedian_point(t)
    anti = {i: centers.antiparallel_through(t, k, name) for name, i in centers.SIDE_NAMES.items()}
    on_side = {s: [meet(SIDES[s], anti[a]) for a in range(3) if a != s] for s in range(3)}
    return _walk_boundary(on_side)


def reflected_triangle_hexagon(t: TriangleRef, p: HPoint) -> Tuple[Hexagon, Conic]:
    """Hexagon cut out by ABC and its point reflection through the inconic centre, plus its circumconic."""
    gamma = inconic_from_perspector(p)
    if classify(gamma) is not ConicClass.ELLIPSE:
        raise NotAnEllipse(f"inconic of {p} is a {classify(gamma)}")
    omega = conic_center(gamma)
    ra, rb, rc = (reflect(v, omega) for v in VERTICES)
    reflected_sides = (join(rb, rc), join(rc, ra), join(ra, rb))
    on_side = {}
    for s in range(3):
        on_side[s] = [meet(SIDES[s], r) for r in reflected_sides if not parallel(SIDES[s], r)]
        if len(on_side[s]) != 2:
            raise GeometryError("reflected triangle shares a side line with the original")
    hexagon = _walk_boundary(on_side)
    circum = conic_through_5(hexagon.vertices[:5])
    if not on_conic(circum, hexagon.vertices[5]):
        raise GeometryError("sixth hexagon vertex is off the conic through the other five")
    return hexagon, circum


def conic_from_cartesian(t: TriangleRef, q: Sequence[Sequence]) -> Conic:
    """Barycentric conic of the plane curve ``(X, Y, 1) Q (X, Y, 1)^T = 0``; inverse of :func:`conic_to_cartesian`."""
    v = [[t.A[0], t.B[0], t.C[0]], [t.A[1], t.B[1], t.C[1]], [1, 1, 1]]
    q = [[Fraction(c) for c in row] for row in q]
    qv = [[sum(q[i][k] * v[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    return Conic.from_matrix([[sum(v[k][i] * qv[k][j] for k in range(3)) for j in range(3)] for i in range(3)])
