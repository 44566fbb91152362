"""Floating-point affine maps of the plane.

This is the only numeric module.  It normalizes an ellipse to a circle and
transports whole configurations, so that statements about an arbitrary
inscribed ellipse can be compared with the Lemoine configuration of the
image triangle.  Every comparison is relative, with ``REL_TOL`` as default.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, Sequence

import numpy as np

from . import centers, conics
from .kernel import HPoint, PointAtInfinity, TriangleRef, bary_to_cartesian

REL_TOL = 1e-9
DET_GUARD = 1e-12


@dataclass(frozen=True)
class AffineMap:
    """``X -> L @ X + t`` on Cartesian points."""

    L: np.ndarray
    t: np.ndarray = field(default_factory=lambda: np.zeros(2))

    def __post_init__(self):
        L = np.asarray(self.L, dtype=float).reshape(2, 2)
        t = np.asarray(self.t, dtype=float).reshape(2)
        if abs(np.linalg.det(L)) <= DET_GUARD:
            raise ValueError("affine map is singular")
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "t", t)

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(np.eye(2))

    @property
    def homogeneous(self) -> np.ndarray:
        h = np.eye(3)
        h[:2, :2] = self.L
        h[:2, 2] = self.t
        return h

    def __call__(self, p: Sequence[float]) -> np.ndarray:
        return self.L @ np.asarray(p, dtype=float) + self.t

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """``self`` after ``inner``."""
        return AffineMap(self.L @ inner.L, self.L @ inner.t + self.t)

    def inverse(self) -> "AffineMap":
        li = np.linalg.inv(self.L)
        return AffineMap(li, -li @ self.t)


def triangle_array(t: TriangleRef) -> np.ndarray:
    return np.array([[float(c) for c in v] for v in t.vertices])


def cartesian_form(t: TriangleRef, c: conics.Conic) -> np.ndarray:
    """Float Cartesian matrix of a barycentric conic, scaled to unit Frobenius norm."""
    q = np.array(conics.conic_to_cartesian(t, c), dtype=float)
    return q / np.linalg.norm(q)


def to_float(t: TriangleRef, p: HPoint) -> np.ndarray:
    return np.array([float(c) for c in bary_to_cartesian(t, p)])


def apply_conic(m: AffineMap, q: np.ndarray) -> np.ndarray:
    """Cartesian conic matrix of the image curve: congruence by the inverse map."""
    hi = np.linalg.inv(m.homogeneous)
    out = hi.T @ q @ hi
    return out / np.linalg.norm(out)


def apply(m: AffineMap, obj, triangle: TriangleRef | None = None) -> np.ndarray:
    """Image of a point, a triangle, a Cartesian conic matrix or a barycentric ``Conic``.

    Barycentric conics need the reference triangle to be placed in the plane.
    """
    if isinstance(obj, TriangleRef):
        return np.array([m(v) for v in triangle_array(obj)])
    if isinstance(obj, conics.Conic):
        if triangle is None:
            raise TypeError("a barycentric conic needs its triangle")
        return apply_conic(m, cartesian_form(triangle, obj))
    if isinstance(obj, HPoint):
        if triangle is None:
            raise TypeError("a barycentric point needs its triangle")
        return m(to_float(triangle, obj))
    arr = np.asarray(obj, dtype=float)
    if arr.shape == (3, 3):
        return apply_conic(m, arr)
    if arr.shape == (3, 2):
        return np.array([m(v) for v in arr])
    return m(arr)


def conic_center_numeric(q: np.ndarray) -> np.ndarray:
    return np.linalg.solve(q[:2, :2], -q[:2, 2])


def circularity_defect(q: np.ndarray) -> float:
    """Relative gap between the two eigenvalues of the quadratic part; 0 for a circle."""
    lam = np.linalg.eigvalsh(q[:2, :2])
    return float(abs(lam[1] - lam[0]) / max(abs(lam[0]), abs(lam[1])))


def ellipse_to_circle(c: conics.Conic, t: TriangleRef) -> AffineMap:
    """Area-preserving map sending the ellipse to a circle with the same centre."""
    if conics.classify(c) is not conics.ConicClass.ELLIPSE:
        raise conics.NotAnEllipse(f"conic is a {conics.classify(c)}")
    q = cartesian_form(t, c)
    s = q[:2, :2]
    lam, vec = np.linalg.eigh(s)
    if lam[0] < 0:
        q, s, lam = -q, -s, -lam[::-1]
        vec = vec[:, ::-1]
    root = vec @ np.diag(np.sqrt(lam)) @ vec.T
    root /= np.sqrt(np.linalg.det(root))
    center = conic_center_numeric(q)
    return AffineMap(root, center - root @ center)


def bary_numeric(tri: np.ndarray, p: np.ndarray) -> np.ndarray:
    """Normalized barycentrics of a Cartesian point in a float triangle."""
    a = np.vstack([tri.T, np.ones(3)])
    return np.linalg.solve(a, np.array([p[0], p[1], 1.0]))


def from_bary_numeric(tri: np.ndarray, w: np.ndarray) -> np.ndarray:
    s = w.sum()
    if abs(s) <= DET_GUARD * np.abs(w).max():
        raise PointAtInfinity("numeric point at infinity")
    return (w / s) @ tri


def symmedian_numeric(tri: np.ndarray) -> np.ndarray:
    a2 = np.sum((tri[1] - tri[2]) ** 2)
    b2 = np.sum((tri[2] - tri[0]) ** 2)
    c2 = np.sum((tri[0] - tri[1]) ** 2)
    return from_bary_numeric(tri, np.array([a2, b2, c2]))


def _rel(a: np.ndarray, b: np.ndarray, scale: float) -> float:
    s = max(scale, float(np.abs(a).max()), float(np.abs(b).max()))
    return float(np.linalg.norm(a - b) / s)


def _diameter(tri: np.ndarray) -> float:
    return max(float(np.linalg.norm(tri[i] - tri[j])) for i in range(3) for j in range(i))


@dataclass
class AffineReport:
    residuals: Dict[str, float]
    tol: float = REL_TOL

    @property
    def passed(self) -> bool:
        return all(r < self.tol for r in self.residuals.values())


def verify_affine_invariants(m: AffineMap, t: TriangleRef, p: HPoint, tol: float = REL_TOL) -> AffineReport:
    """Compare exact constructions carried through ``m`` with numeric recomputation in the image triangle.

    ``p`` must be finite with nonzero coordinates, and its isotomic conjugate
    and inconic centre must be finite too.
    """
    tri = triangle_array(t)
    img = apply(m, t)
    scale = _diameter(img)
    res = {}

    res["centroid"] = _rel(m(tri.mean(axis=0)), img.mean(axis=0), scale)

    p_img = m(to_float(t, p))
    w = bary_numeric(img, p_img)

    iso = centers.isotomic_conjugate(p)
    res["isotomic"] = _rel(m(to_float(t, iso)), from_bary_numeric(img, 1.0 / w), scale)

    comp = centers.complement(p)
    w_comp = np.array([w[1] + w[2], w[2] + w[0], w[0] + w[1]])
    res["complement"] = _rel(m(to_float(t, comp)), from_bary_numeric(img, w_comp), scale)

    gamma = conics.inconic_from_perspector(p)
    center = conics.conic_center(gamma)
    img_conic = apply(m, gamma, triangle=t)
    res["inconic_center"] = _rel(m(to_float(t, center)), conic_center_numeric(img_conic), scale)
    return AffineReport(res, tol)


def lemoine_reduction(t: TriangleRef, p: HPoint) -> Dict[str, float]:
    """Normalize the circumconic of the reflected-triangle hexagon of ``p`` to a circle.

    Returns relative residuals: how far the image conic is from a circle, the
    spread of vertex distances to the image centre, and the distance between
    the image centre and the symmedian point of the image triangle.
    """
    hexagon, big = conics.reflected_triangle_hexagon(t, p)
    omega = conics.conic_center(conics.inconic_from_perspector(p))
    m = ellipse_to_circle(big, t)
    img_tri = apply(m, t)
    img_omega = m(to_float(t, omega))
    dists = np.array([np.linalg.norm(m(to_float(t, v)) - img_omega) for v in hexagon.vertices])
    return {
        "circularity": circularity_defect(apply(m, big, triangle=t)),
        "radius_spread": float((dists.max() - dists.min()) / dists.max()),
        "center_vs_symmedian": _rel(img_omega, symmedian_numeric(img_tri), _diameter(img_tri)),
    }


def random_map(rng: random.Random, scale_range=(0.2, 5.0), shift: float = 100.0) -> AffineMap:
    """Rotation * diagonal scaling * rotation, with a bounded translation."""

    def rot(a):
        return np.array([[np.cos(a), -np.sin(a)], [np.sin(a), np.cos(a)]])

    s = np.diag([rng.uniform(*scale_range), rng.uniform(*scale_range)])
    if rng.random() < 0.5:
        s[1, 1] = -s[1, 1]
    L = rot(rng.uniform(0, 2 * np.pi)) @ s @ rot(rng.uniform(0, 2 * np.pi))
    return AffineMap(L, [rng.uniform(-shift, shift), rng.uniform(-shift, shift)])
