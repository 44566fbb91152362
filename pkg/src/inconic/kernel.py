"""Exact projective arithmetic in homogeneous barycentric coordinates.

Points and lines are triples of coprime integers taken up to scale, relative
to a reference triangle ``ABC``.  The vertices are ``(1:0:0)``, ``(0:1:0)``
and ``(0:0:1)``; a point with coordinate sum zero lies on the line at
infinity.  Rational inputs are accepted anywhere and cleared of denominators
on construction, so projective equality is plain tuple equality.

Cartesian coordinates only appear at the boundary (``TriangleRef``,
``bary_to_cartesian``/``cartesian_to_bary``) and are ``Fraction`` valued.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

Scalar = Fraction
Number = Union[int, Fraction, str]
Cartesian = Tuple[Fraction, Fraction]


class GeometryError(ValueError):
    """Base class for every degenerate-configuration error."""


class IdenticalPoints(GeometryError):
    pass


class IdenticalLines(GeometryError):
    pass


class PointAtInfinity(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


def to_scalar(value: Number) -> Fraction:
    """Parse ints, fractions and strings such as ``"3/7"`` without rounding."""
    if isinstance(value, float):
        raise TypeError("floats are not accepted in the exact layer")
    return Fraction(value)


def canonical_tuple(values: Iterable[Number]) -> Tuple[int, ...]:
    """Clear denominators, divide by the gcd and make the first nonzero entry positive."""
    fr = [to_scalar(v) for v in values]
    den = 1
    for f in fr:
        den = math.lcm(den, f.denominator)
    ints = [int(f * den) for f in fr]
    g = 0
    for i in ints:
        g = math.gcd(g, i)
    if g == 0:
        raise GeometryError("all coordinates are zero")
    lead = next(i for i in ints if i != 0)
    if lead < 0:
        g = -g
    return tuple(i // g for i in ints)


def cross(u: Sequence[int], v: Sequence[int]) -> Tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence, v: Sequence):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(u: Sequence, v: Sequence, w: Sequence):
    return dot(u, cross(v, w))


@dataclass(frozen=True)
class _Homogeneous:
    coords: Tuple[int, int, int]

    def __init__(self, *args: Number):
        if len(args) == 1 and not isinstance(args[0], (int, Fraction, str)):
            args = tuple(args[0])
        if len(args) != 3:
            raise TypeError(f"{type(self).__name__} needs three coordinates")
        object.__setattr__(self, "coords", canonical_tuple(args))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({':'.join(map(str, self.coords))})"

    def __str__(self) -> str:
        return "(" + ":".join(map(str, self.coords)) + ")"


class HPoint(_Homogeneous):
    """A point ``(x:y:z)``; ``HPoint(2, 1, 1) == HPoint(4, 2, 2)``."""

    @property
    def x(self) -> int:
        return self.coords[0]

    @property
    def y(self) -> int:
        return self.coords[1]

    @property
    def z(self) -> int:
        return self.coords[2]

    @property
    def weight(self) -> int:
        return sum(self.coords)

    @property
    def is_finite(self) -> bool:
        return self.weight != 0

    def on(self, line: "HLine") -> bool:
        return dot(self.coords, line.coords) == 0


class HLine(_Homogeneous):
    """A line ``l*x + m*y + n*z = 0``."""

    @property
    def l(self) -> int:  # noqa: E743
        return self.coords[0]

    @property
    def m(self) -> int:
        return self.coords[1]

    @property
    def n(self) -> int:
        return self.coords[2]

    def contains(self, point: HPoint) -> bool:
        return dot(self.coords, point.coords) == 0


VERTEX_A = HPoint(1, 0, 0)
VERTEX_B = HPoint(0, 1, 0)
VERTEX_C = HPoint(0, 0, 1)
CENTROID = HPoint(1, 1, 1)
SIDE_BC = HLine(1, 0, 0)
SIDE_CA = HLine(0, 1, 0)
SIDE_AB = HLine(0, 0, 1)
VERTICES = (VERTEX_A, VERTEX_B, VERTEX_C)
SIDES = (SIDE_BC, SIDE_CA, SIDE_AB)


def line_at_infinity() -> HLine:
    return HLine(1, 1, 1)


def join(p: HPoint, q: HPoint) -> HLine:
    c = cross(p.coords, q.coords)
    if c == (0, 0, 0):
        raise IdenticalPoints(f"cannot join {p} with itself")
    return HLine(c)


def meet(l: HLine, m: HLine) -> HPoint:  # noqa: E741
    c = cross(l.coords, m.coords)
    if c == (0, 0, 0):
        raise IdenticalLines(f"cannot meet {l} with itself")
    return HPoint(c)


def collinear(p: HPoint, q: HPoint, r: HPoint) -> bool:
    return det3(p.coords, q.coords, r.coords) == 0


def concurrent(l: HLine, m: HLine, n: HLine) -> bool:  # noqa: E741
    return det3(l.coords, m.coords, n.coords) == 0


def normalize(p: HPoint) -> Tuple[Fraction, Fraction, Fraction]:
    """Affine representative of ``p`` with coordinate sum 1."""
    s = p.weight
    if s == 0:
        raise PointAtInfinity(f"{p} lies on the line at infinity")
    return (Fraction(p.x, s), Fraction(p.y, s), Fraction(p.z, s))


def midpoint(p: HPoint, q: HPoint) -> HPoint:
    sp, sq = p.weight, q.weight
    if sp == 0 or sq == 0:
        raise PointAtInfinity("midpoint needs finite points")
    return HPoint(sq * a + sp * b for a, b in zip(p, q))


def reflect(p: HPoint, m: HPoint) -> HPoint:
    """Point reflection of ``p`` through the centre ``m`` (``2m - p`` in affine terms)."""
    sp, sm = p.weight, m.weight
    if sp == 0 or sm == 0:
        raise PointAtInfinity("reflection needs finite points")
    return HPoint(2 * sp * b - sm * a for a, b in zip(p, m))


def parallel_through(p: HPoint, line: HLine) -> HLine:
    if not p.is_finite:
        raise PointAtInfinity(f"{p} lies on the line at infinity")
    return join(p, meet(line, line_at_infinity()))


def parallel(l: HLine, m: HLine) -> bool:  # noqa: E741
    """True when the two lines meet on the line at infinity (or coincide)."""
    c = cross(l.coords, m.coords)
    return sum(c) == 0


def _signed_area2(p: Cartesian, q: Cartesian, r: Cartesian) -> Fraction:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _sq_dist(p: Cartesian, q: Cartesian) -> Fraction:
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


@dataclass(frozen=True)
class TriangleRef:
    """Reference triangle with exact Cartesian vertices.

    ``a2``, ``b2``, ``c2`` are the squared lengths of ``BC``, ``CA`` and ``AB``.
    """

    A: Cartesian
    B: Cartesian
    C: Cartesian
    a2: Fraction = field(init=False)
    b2: Fraction = field(init=False)
    c2: Fraction = field(init=False)

    def __post_init__(self):
        for name in "ABC":
            x, y = getattr(self, name)
            object.__setattr__(self, name, (to_scalar(x), to_scalar(y)))
        if _signed_area2(self.A, self.B, self.C) == 0:
            raise DegenerateTriangle("vertices are collinear")
        object.__setattr__(self, "a2", _sq_dist(self.B, self.C))
        object.__setattr__(self, "b2", _sq_dist(self.C, self.A))
        object.__setattr__(self, "c2", _sq_dist(self.A, self.B))

    @classmethod
    def from_points(cls, pts: Sequence[Sequence[Number]]) -> "TriangleRef":
        a, b, c = pts
        return cls(tuple(a), tuple(b), tuple(c))

    @property
    def vertices(self) -> Tuple[Cartesian, Cartesian, Cartesian]:
        return (self.A, self.B, self.C)

    @property
    def area2(self) -> Fraction:
        """Twice the signed area."""
        return _signed_area2(self.A, self.B, self.C)

    @property
    def squared_sides(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.a2, self.b2, self.c2)

    def conway(self) -> Tuple[Fraction, Fraction, Fraction]:
        """Twice Conway's S_A, S_B, S_C: ``b2 + c2 - a2`` and cyclic."""
        a2, b2, c2 = self.squared_sides
        return (b2 + c2 - a2, c2 + a2 - b2, a2 + b2 - c2)

    def is_acute(self) -> bool:
        return all(s > 0 for s in self.conway())

    def is_right(self) -> bool:
        return any(s == 0 for s in self.conway())

    def is_obtuse(self) -> bool:
        return any(s < 0 for s in self.conway())


def bary_to_cartesian(t: TriangleRef, p: HPoint) -> Cartesian:
    x, y, z = normalize(p)
    return (
        x * t.A[0] + y * t.B[0] + z * t.C[0],
        x * t.A[1] + y * t.B[1] + z * t.C[1],
    )


def cartesian_to_bary(t: TriangleRef, p: Sequence[Number]) -> HPoint:
    q = (to_scalar(p[0]), to_scalar(p[1]))
    return HPoint(
        _signed_area2(q, t.B, t.C),
        _signed_area2(t.A, q, t.C),
        _signed_area2(t.A, t.B, q),
    )


def cartesian_line_to_bary(t: TriangleRef, u: Number, v: Number, w: Number) -> HLine:
    """Barycentric coordinates of the Cartesian line ``u*X + v*Y + w = 0``.

    An affine function is determined by its values at the three vertices.
    """
    u, v, w = to_scalar(u), to_scalar(v), to_scalar(w)
    return HLine(u * px + v * py + w for px, py in t.vertices)


def bary_line_to_cartesian(t: TriangleRef, line: HLine) -> Tuple[Fraction, Fraction, Fraction]:
    """Cartesian ``(u, v, w)`` with ``u*X + v*Y + w = 0`` for a barycentric line."""
    (ax, ay), (bx, by), (cx, cy) = t.vertices
    d = t.area2
    # barycentric coordinate functions are affine in (X, Y): x = (alpha_x X + alpha_y Y + alpha_0) / d
    fa = (by - cy, cx - bx, bx * cy - cx * by)
    fb = (cy - ay, ax - cx, cx * ay - ax * cy)
    fc = (ay - by, bx - ax, ax * by - bx * ay)
    l, m, n = line.coords  # noqa: E741
    return tuple((l * fa[i] + m * fb[i] + n * fc[i]) / d for i in range(3))


def squared_distance(t: TriangleRef, p: HPoint, q: HPoint) -> Fraction:
    return _sq_dist(bary_to_cartesian(t, p), bary_to_cartesian(t, q))
