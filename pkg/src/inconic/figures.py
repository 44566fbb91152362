"""SVG reproductions of the inconic figures.

Geometry comes from the exact layer; floats appear only when coordinates are
written into the SVG.  The viewport is the triangle's bounding box grown by
20% in each direction, with the y-axis flipped to screen convention.
"""

from __future__ import annotations

import math
from typing import Iterable, List, Optional, Sequence, Tuple
from xml.sax.saxutils import escape

import numpy as np

from . import centers, conics
from .kernel import (
    CENTROID,
    VERTICES,
    HLine,
    HPoint,
    TriangleRef,
    bary_line_to_cartesian,
    bary_to_cartesian,
    join,
    midpoint,
    reflect,
    squared_distance,
)

WIDTH = 800
CONIC_SAMPLES = 256
FIGURE_IDS = range(1, 8)

STYLE = {
    "triangle": "fill:none;stroke:#000;stroke-width:2",
    "cevian": "stroke:#777;stroke-width:1",
    "construction": "stroke:#c33;stroke-width:1;stroke-dasharray:4 3",
    "orthic": "fill:none;stroke:#6af;stroke-width:1.5",
    "hexagon": "fill:none;stroke:#2a2;stroke-width:1.5",
    "conic": "fill:none;stroke:#828;stroke-width:1.5",
    "circle": "fill:none;stroke:#22c;stroke-width:1.5",
    "point": "fill:#000",
    "label": "font:14px sans-serif;fill:#000",
}


def _f(v: float) -> str:
    out = f"{v:.3f}"
    return "0.000" if out == "-0.000" else out


class Canvas:
    def __init__(self, t: TriangleRef, title: str):
        xs = [float(v[0]) for v in t.vertices]
        ys = [float(v[1]) for v in t.vertices]
        w, h = max(xs) - min(xs), max(ys) - min(ys)
        pad_x, pad_y = 0.2 * w, 0.2 * h
        self.x0, self.x1 = min(xs) - pad_x, max(xs) + pad_x
        self.y0, self.y1 = min(ys) - pad_y, max(ys) + pad_y
        self.scale = WIDTH / (self.x1 - self.x0)
        self.height = (self.y1 - self.y0) * self.scale
        self.t = t
        self.title = title
        self.items: List[str] = []

    def xy(self, p: Sequence[float]) -> Tuple[float, float]:
        return ((float(p[0]) - self.x0) * self.scale, (self.y1 - float(p[1])) * self.scale)

    def cart(self, p: HPoint) -> Tuple[float, float]:
        x, y = bary_to_cartesian(self.t, p)
        return (float(x), float(y))

    def polygon(self, pts: Iterable[HPoint], cls: str, name: str = "") -> None:
        coords = " ".join("{},{}".format(*map(_f, self.xy(self.cart(p)))) for p in pts)
        self.items.append(f'<polygon class="{cls}" data-name="{escape(name)}" points="{coords}" style="{STYLE[cls]}"/>')

    def segment(self, p: HPoint, q: HPoint, cls: str = "cevian", name: str = "") -> None:
        (x1, y1), (x2, y2) = self.xy(self.cart(p)), self.xy(self.cart(q))
        self.items.append(
            f'<line class="{cls}" data-name="{escape(name)}" x1="{_f(x1)}" y1="{_f(y1)}" '
            f'x2="{_f(x2)}" y2="{_f(y2)}" style="{STYLE[cls]}"/>'
        )

    def line(self, line: HLine, cls: str = "construction", name: str = "") -> None:
        """Full line clipped to the viewport."""
        u, v, w = (float(c) for c in bary_line_to_cartesian(self.t, line))
        hits = []
        if abs(v) > 1e-15:
            for x in (self.x0, self.x1):
                y = -(u * x + w) / v
                if self.y0 <= y <= self.y1:
                    hits.append((x, y))
        if abs(u) > 1e-15:
            for y in (self.y0, self.y1):
                x = -(v * y + w) / u
                if self.x0 <= x <= self.x1:
                    hits.append((x, y))
        if len(hits) < 2:
            return
        hits.sort()
        (x1, y1), (x2, y2) = self.xy(hits[0]), self.xy(hits[-1])
        self.items.append(
            f'<line class="{cls}" data-name="{escape(name)}" x1="{_f(x1)}" y1="{_f(y1)}" '
            f'x2="{_f(x2)}" y2="{_f(y2)}" style="{STYLE[cls]}"/>'
        )

    def point(self, p: HPoint, label: str) -> None:
        x, y = self.xy(self.cart(p))
        self.items.append(
            f'<circle class="point" data-label="{escape(label)}" cx="{_f(x)}" cy="{_f(y)}" r="3" style="{STYLE["point"]}"/>'
        )
        self.items.append(f'<text class="label" x="{_f(x + 5)}" y="{_f(y - 5)}" style="{STYLE["label"]}">{escape(label)}</text>')

    def circle(self, center: HPoint, radius2, name: str = "") -> None:
        x, y = self.xy(self.cart(center))
        r = math.sqrt(float(radius2)) * self.scale
        self.items.append(
            f'<circle class="circle" data-name="{escape(name)}" cx="{_f(x)}" cy="{_f(y)}" r="{_f(r)}" style="{STYLE["circle"]}"/>'
        )

    def conic(self, c: conics.Conic, base: HPoint, name: str = "") -> None:
        """Polyline through points of the conic, one per line through ``base`` (a point on it)."""
        q = np.array(conics.conic_to_cartesian(self.t, c), dtype=float)
        q /= np.abs(q).max()
        f = np.array([*self.cart(base), 1.0])
        span = max(self.x1 - self.x0, self.y1 - self.y0)
        runs: List[List[Tuple[float, float]]] = [[]]
        for theta in np.linspace(0.0, math.pi, CONIC_SAMPLES, endpoint=False):
            d = np.array([math.cos(theta), math.sin(theta), 0.0])
            qd = d @ q @ d
            if abs(qd) < 1e-12:
                runs.append([])
                continue
            s = -2.0 * (f @ q @ d) / qd
            p = f[:2] + s * d[:2]
            if np.abs(p - f[:2]).max() > 4 * span:
                runs.append([])
                continue
            runs[-1].append(self.xy(p))
        closed = conics.classify(c) is conics.ConicClass.ELLIPSE
        parts = []
        for run in runs:
            if len(run) < 2:
                continue
            parts.append("M " + " L ".join(f"{_f(x)} {_f(y)}" for x, y in run))
        d_attr = " ".join(parts) + (" Z" if closed and len(parts) == 1 else "")
        self.items.append(
            f'<path class="conic" data-name="{escape(name)}" data-samples="{CONIC_SAMPLES}" d="{d_attr}" style="{STYLE["conic"]}"/>'
        )

    def render(self) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(WIDTH)}" '
            f'height="{_f(self.height)}" viewBox="0 0 {_f(WIDTH)} {_f(self.height)}">\n'
            f"<title>{escape(self.title)}</title>\n"
        )
        return head + "\n".join(self.items) + "\n</svg>\n"


def _triangle(cv: Canvas) -> None:
    cv.polygon(VERTICES, "triangle", "ABC")
    for v, name in zip(VERTICES, "ABC"):
        cv.point(v, name)


def figure_inconic(t: TriangleRef, p: HPoint) -> str:
    cv = Canvas(t, "Inscribed conic with perspector P")
    _triangle(cv)
    gamma = conics.inconic_from_perspector(p)
    feet = centers.cevian_feet(p)
    cv.conic(gamma, feet[0], "inconic")
    for v, f, name in zip(VERTICES, feet, ("A'", "B'", "C'")):
        cv.line(join(v, f), "cevian", f"cevian {name}")
        cv.point(f, name)
    cv.point(p, "P")
    if conics.classify(gamma) is not conics.ConicClass.PARABOLA:
        cv.point(conics.conic_center(gamma), "Ω")
    return cv.render()


def figure_contact_chords(t: TriangleRef, p: HPoint) -> str:
    cv = Canvas(t, "Vertex to contact-chord midpoint lines meet at the centre")
    _triangle(cv)
    gamma = conics.inconic_from_perspector(p)
    feet = centers.cevian_feet(p)
    cv.conic(gamma, feet[0], "inconic")
    cv.polygon(feet, "orthic", "contact triangle")
    lines, where = conics.center_by_contact_chords(p)
    mids = (midpoint(feet[1], feet[2]), midpoint(feet[2], feet[0]), midpoint(feet[0], feet[1]))
    for i, (line, m) in enumerate(zip(lines, mids)):
        cv.line(line, "construction", f"chord-midpoint line {'ABC'[i]}")
        cv.point(m, f"M{'ABC'[i]}")
    for f, name in zip(feet, ("A'", "B'", "C'")):
        cv.point(f, name)
    cv.point(where, "Ω")
    return cv.render()


def figure_isotomic(t: TriangleRef, p: HPoint) -> str:
    cv = Canvas(t, "Isotomic conjugate, its complement, and the inconic centred there")
    _triangle(cv)
    feet = centers.cevian_feet(p)
    iso = centers.isotomic_conjugate(p)
    for i, (v, f, m) in enumerate(zip(VERTICES, feet, centers.side_midpoints())):
        r = reflect(f, m)
        cv.segment(v, f, "cevian", f"cevian {'ABC'[i]}0")
        cv.line(join(v, r), "construction", f"reflected cevian {'ABC'[i]}")
        cv.point(f, f"{'ABC'[i]}0")
        cv.point(r, f"{'ABC'[i]}0'")
    cv.point(p, "D")
    cv.point(CENTROID, "G")
    if iso.is_finite:
        cv.point(iso, "Iso")
        comp = centers.complement(iso)
        cv.point(comp, "A Iso")
        cv.segment(iso, comp, "construction", "homothety -1/2 about G")
    gamma = conics.inconic_from_perspector(p)
    cv.conic(gamma, feet[0], "inconic")
    return cv.render()


def figure_orthic(t: TriangleRef) -> str:
    cv = Canvas(t, "Orthic triangle: vertex to orthic-midpoint lines meet at K")
    _triangle(cv)
    feet = centers.altitude_feet(t)
    cv.polygon(feet, "orthic", "orthic triangle")
    k = centers.symmedian_point(t)
    for i, (v, m) in enumerate(zip(VERTICES, centers.orthic_midpoints(t))):
        cv.line(join(v, m), "construction", f"symmedian {'ABC'[i]}")
        cv.point(m, f"{'ABC'[i]}m")
    for f, name in zip(feet, ("Ah", "Bh", "Ch")):
        cv.point(f, name)
    cv.point(k, "K")
    return cv.render()


def figure_lemoine_hexagon(t: TriangleRef) -> str:
    cv = Canvas(t, "Lemoine hexagon, second Lemoine circle, orthic conic")
    _triangle(cv)
    k = centers.symmedian_point(t)
    hexagon = conics.lemoine_hexagon(t)
    cv.polygon(hexagon.vertices, "hexagon", "Lemoine hexagon")
    cv.circle(k, squared_distance(t, k, hexagon.vertices[0]), "second Lemoine circle")
    for i, d in enumerate(hexagon.diagonals()):
        cv.line(d, "construction", f"antiparallel {i + 1}")
    feet = centers.altitude_feet(t)
    cv.conic(conics.orthic_conic(t), feet[0], "orthic conic")
    for v, name in zip(hexagon.vertices, ("A1", "A2", "B1", "B2", "C1", "C2")):
        cv.point(v, name)
    cv.point(k, "K")
    return cv.render()


def figure_altitude_midlines(t: TriangleRef) -> str:
    cv = Canvas(t, "Side-midpoint to altitude-midpoint lines, and K as complement of the isotomic orthocentre")
    _triangle(cv)
    k = centers.symmedian_point(t)
    feet = centers.altitude_feet(t)
    h_iso = centers.isotomic_conjugate(centers.orthocenter(t))
    for i, (v, f, sm, am) in enumerate(
        zip(VERTICES, feet, centers.side_midpoints(), centers.altitude_midpoints(t))
    ):
        tag = "ABC"[i]
        cv.segment(v, f, "cevian", f"altitude {tag}")
        cv.line(join(sm, am), "construction", f"midline {tag}")
        r = reflect(f, sm)
        cv.line(join(v, r), "cevian", f"isotomic cevian {tag}")
        cv.point(sm, f"{tag}m")
        cv.point(am, f"{tag}m'")
        cv.point(f, f"{tag}h")
        cv.point(r, f"{tag}h'")
    cv.point(CENTROID, "G")
    cv.point(k, "K")
    if h_iso.is_finite:
        cv.point(h_iso, "Hm")
    return cv.render()


def figure_reflected_hexagon(t: TriangleRef, p: HPoint) -> str:
    cv = Canvas(t, "Triangle and its reflection through the inconic centre share the inconic")
    _triangle(cv)
    gamma = conics.inconic_from_perspector(p)
    omega = conics.conic_center(gamma)
    hexagon, big = conics.reflected_triangle_hexagon(t, p)
    reflected = [reflect(v, omega) for v in VERTICES]
    cv.polygon(reflected, "triangle", "A'B'C'")
    cv.polygon(hexagon.vertices, "hexagon", "hexagon")
    cv.conic(gamma, centers.cevian_feet(p)[0], "inconic")
    cv.conic(big, hexagon.vertices[0], "circumconic")
    for d in hexagon.diagonals():
        cv.line(d, "construction", "diagonal")
    for v, name in zip(reflected, ("A'", "B'", "C'")):
        cv.point(v, name)
    for v, name in zip(hexagon.vertices, ("A1", "A2", "B1", "B2", "C1", "C2")):
        cv.point(v, name)
    cv.point(omega, "Ω")
    return cv.render()


def render_figure(fig_id: int, t: TriangleRef, p: Optional[HPoint] = None) -> str:
    p = p or HPoint(1, 2, 3)
    if fig_id == 1:
        return figure_inconic(t, p)
    if fig_id == 2:
        return figure_contact_chords(t, p)
    if fig_id == 3:
        return figure_isotomic(t, p)
    if fig_id == 4:
        return figure_orthic(t)
    if fig_id == 5:
        return figure_lemoine_hexagon(t)
    if fig_id == 6:
        return figure_altitude_midlines(t)
    if fig_id == 7:
        return figure_reflected_hexagon(t, p)
    raise ValueError(f"figure id must be in 1..7, got {fig_id}")
