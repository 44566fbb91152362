"""Executable lemmas and theorems, checked exactly on random rational triangles.

Each ``verify_*`` function states one claim about a concrete triangle and
returns ``True``/``False``; none of them compares floats.  ``run_suite``
draws triangles and points from a seeded sampler, evaluates every property,
and shrinks the first counterexample it meets.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import centers, conics
from .centers import complement, isotomic_conjugate
from .kernel import (
    CENTROID,
    SIDES,
    VERTICES,
    GeometryError,
    HPoint,
    TriangleRef,
    bary_to_cartesian,
    collinear,
    concurrent,
    join,
    meet,
    midpoint,
    parallel,
    reflect,
    squared_distance,
)

SHAPES = ("any", "non-right", "acute")


# -- samplers ---------------------------------------------------------------


@dataclass(frozen=True)
class TriangleSampler:
    """Integer-grid triangles in ``[-bound, bound]^2`` with nonzero area and the requested shape."""

    seed: int = 0
    bound: int = 100
    shape: str = "any"

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ValueError(f"unknown shape filter {self.shape!r}")

    def accepts(self, t: TriangleRef) -> bool:
        if self.shape == "acute":
            return t.is_acute()
        if self.shape == "non-right":
            return not t.is_right()
        return True

    def draw(self, rng: random.Random) -> TriangleRef:
        b = self.bound
        while True:
            pts = [(rng.randint(-b, b), rng.randint(-b, b)) for _ in range(3)]
            try:
                t = TriangleRef.from_points(pts)
            except GeometryError:
                continue
            if self.accepts(t):
                return t


def sample_perspector(rng: random.Random, bound: int = 10) -> HPoint:
    """Integer triple with nonzero coordinates and nonzero sum."""
    while True:
        c = [rng.choice([i for i in range(-bound, bound + 1) if i]) for _ in range(3)]
        if sum(c):
            return HPoint(c)


def sample_parabolic_perspector(rng: random.Random, bound: int = 10) -> HPoint:
    """Rational point of the Steiner circumellipse ``yz + zx + xy = 0``: ``(u(u+v), v(u+v), -uv)``."""
    while True:
        u, v = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if u and v and u + v:
            c = [u * (u + v), v * (u + v), -u * v]
            rng.shuffle(c)
            return HPoint(c)


def _stricter(a: str, b: str) -> str:
    return max(a, b, key=SHAPES.index)


# -- verifiers ---------------------------------------------------------------


def _signed_ratio(p, d, q) -> Fraction:
    """``lambda`` with ``d - p = lambda (q - d)`` for collinear Cartesian points."""
    u = (d[0] - p[0], d[1] - p[1])
    w = (q[0] - d[0], q[1] - d[1])
    return (u[0] * w[0] + u[1] * w[1]) / (w[0] * w[0] + w[1] * w[1])


def ceva_product(t: TriangleRef, feet: Sequence[HPoint]) -> Fraction:
    a, b, c = t.vertices
    d, e, f = (bary_to_cartesian(t, x) for x in feet)
    return _signed_ratio(b, d, c) * _signed_ratio(c, e, a) * _signed_ratio(a, f, b)


def verify_perspector_concurrency(t: TriangleRef, p: HPoint) -> bool:
    """Cevians through the contact points of the inconic concur at ``p``, and Ceva's product is 1."""
    gamma = conics.inconic_from_perspector(p)
    contacts = [conics.tangency_point(gamma, side) for side in SIDES]
    lines = [join(v, x) for v, x in zip(VERTICES, contacts)]
    if not concurrent(*lines):
        return False
    if meet(lines[0], lines[1]) != p:
        return False
    return ceva_product(t, contacts) == 1


def verify_lemma_chord_pole_center(c: conics.Conic, b: HPoint, d: HPoint) -> bool:
    """Pole of a chord, the chord midpoint and the centre are collinear."""
    if not (conics.on_conic(c, b) and conics.on_conic(c, d)) or b == d:
        raise GeometryError("chord endpoints must be distinct points of the conic")
    tip = conics.pole(c, join(b, d))
    return collinear(tip, midpoint(b, d), conics.conic_center(c))


def verify_lemma_symmedian_midpoints(t: TriangleRef) -> bool:
    mids = centers.orthic_midpoints(t)
    lines = [join(v, m) for v, m in zip(VERTICES, mids)]
    return concurrent(*lines) and meet(lines[0], lines[1]) == centers.symmedian_point(t)


def verify_lemma_altitude_midline(t: TriangleRef) -> bool:
    k = centers.symmedian_point(t)
    pairs = zip(centers.side_midpoints(), centers.altitude_midpoints(t))
    return all(join(sm, am).contains(k) for sm, am in pairs)


def verify_thm1_orthic_center(t: TriangleRef) -> bool:
    if t.is_right():
        raise centers.DegenerateOrthic("right triangle: orthocentre at a vertex")
    return conics.conic_center(conics.orthic_conic(t)) == centers.symmedian_point(t)


def median_meet_points(t: TriangleRef) -> List[Optional[HPoint]]:
    """For each vertex, the meet of the median and the line from the altitude midpoint to the reflected foot.

    ``None`` where the altitude foot is the side midpoint (isosceles at that vertex), since the two lines coincide.
    """
    out = []
    feet = centers.altitude_feet(t)
    for v, foot, side_mid, alt_mid in zip(VERTICES, feet, centers.side_midpoints(), centers.altitude_midpoints(t)):
        if foot == side_mid:
            out.append(None)
            continue
        reflected_foot = reflect(foot, side_mid)
        out.append(meet(join(v, side_mid), join(alt_mid, reflected_foot)))
    return out


def verify_thm2_K_is_complement_isotomic_H(t: TriangleRef) -> bool:
    if t.is_right():
        raise centers.DegenerateOrthic("right triangle: orthocentre on a side line")
    k = centers.symmedian_point(t)
    iso_h = isotomic_conjugate(centers.orthocenter(t))
    if complement(iso_h) != k or centers.complement_by_vector(iso_h) != k:
        return False
    if any(g is not None and g != CENTROID for g in median_meet_points(t)):
        return False
    # homothety about G with ratio -1/2 carries A -> midpoint of BC and H_m -> K
    return all(complement(v) == m for v, m in zip(VERTICES, centers.side_midpoints()))


def _cartesian_center(t: TriangleRef, c: conics.Conic):
    q = conics.conic_to_cartesian(t, c)
    (a, b), (_, d) = (q[0][0], q[0][1]), (q[1][0], q[1][1])
    e, f = q[0][2], q[1][2]
    det = a * d - b * b
    return ((-e * d + b * f) / det, (-a * f + b * e) / det)


def verify_thm3_center_formula(t: TriangleRef, p: HPoint) -> bool:
    """Centre of the inconic equals complement(isotomic(p)); for parabolas that point is at infinity."""
    gamma = conics.inconic_from_perspector(p)
    predicted = complement(isotomic_conjugate(p))
    kind = conics.classify(gamma)
    if kind is conics.ConicClass.PARABOLA:
        return not predicted.is_finite
    if kind is conics.ConicClass.DEGENERATE:
        return False
    center = conics.conic_center(gamma)
    if center != predicted:
        return False
    return _cartesian_center(t, gamma) == bary_to_cartesian(t, predicted)


def verify_hexagon_lemma(t: TriangleRef) -> bool:
    hexagon = conics.lemoine_hexagon(t)
    k = centers.symmedian_point(t)
    radii = {squared_distance(t, v, k) for v in hexagon.vertices}
    if len(radii) != 1:
        return False
    diag_ok = all(line.contains(k) for line in hexagon.diagonals())
    gamma = conics.orthic_conic(t)
    sides = hexagon.sides()
    if not diag_ok or not all(conics.is_tangent(gamma, s) for s in sides):
        return False
    for s1, s2 in hexagon.opposite_sides():
        if not parallel(s1, s2):
            return False
    v = hexagon.vertices
    for i in range(3):
        if squared_distance(t, v[i], v[i + 1]) != squared_distance(t, v[i + 3], v[(i + 4) % 6]):
            return False
    # sides 0, 2, 4 lie on AB, BC, CA
    on_triangle = {conics.tangency_point(gamma, sides[i]) for i in (0, 2, 4)}
    return on_triangle == set(centers.altitude_feet(t))


def center_map(p: HPoint) -> HPoint:
    return complement(isotomic_conjugate(p))


def verify_corollary_steiner_fixed_point(points: Sequence[HPoint]) -> bool:
    if center_map(CENTROID) != CENTROID:
        return False
    return all(center_map(p) != p for p in points if p != CENTROID)


def verify_contact_chord_center(p: HPoint) -> bool:
    lines, where = conics.center_by_contact_chords(p)
    return concurrent(*lines) and where == conics.conic_center(conics.inconic_from_perspector(p))


# -- properties --------------------------------------------------------------


def _feet_finite(p: HPoint) -> bool:
    return all(f.is_finite for f in centers.cevian_feet(p))


def _central(p: HPoint) -> bool:
    return conics.classify(conics.inconic_closed_form(p)) in (conics.ConicClass.ELLIPSE, conics.ConicClass.HYPERBOLA)


def _gen_feet_finite(rng, t):
    while True:
        p = sample_perspector(rng)
        if _feet_finite(p):
            return (p,)


def _gen_central(rng, t):
    while True:
        p = sample_perspector(rng)
        if _feet_finite(p) and _central(p):
            return (p,)


def _gen_center_formula(rng, t):
    if rng.random() < 0.25:
        return (sample_parabolic_perspector(rng),)
    return (sample_perspector(rng),)


def _gen_non_centroid(rng, t):
    while True:
        p = sample_perspector(rng)
        if p != CENTROID:
            return (p,)


def _random_direction(rng) -> HPoint:
    while True:
        c = [rng.randint(-20, 20) for _ in range(3)]
        if any(c):
            return HPoint(c)


def _chord(extras):
    p, d1, d2 = extras
    gamma = conics.inconic_from_perspector(p)
    base = centers.cevian_feet(p)[0]
    return gamma, conics.second_intersection(gamma, base, d1), conics.second_intersection(gamma, base, d2)


def _chord_valid(t, extras) -> bool:
    p = extras[0]
    if 0 in p.coords or not _central(p):
        return False
    try:
        _, b, d = _chord(extras)
    except GeometryError:
        return False
    return b.is_finite and d.is_finite and b != d


def _gen_chord(rng, t):
    while True:
        extras = (sample_perspector(rng), _random_direction(rng), _random_direction(rng))
        if _chord_valid(t, extras):
            return extras


def _check_chord(t, extras) -> bool:
    gamma, b, d = _chord(extras)
    return verify_lemma_chord_pole_center(gamma, b, d)


def _proper(t, extras) -> bool:
    return all(0 not in p.coords for p in extras)


@dataclass(frozen=True)
class Property:
    name: str
    min_shape: str
    check: Callable[[TriangleRef, tuple], bool]
    generate: Callable[[random.Random, TriangleRef], tuple] = lambda rng, t: ()
    valid: Callable[[TriangleRef, tuple], bool] = lambda t, extras: True


PROPERTIES: Dict[str, Property] = {
    p.name: p
    for p in [
        Property(
            "perspector_concurrency",
            "any",
            lambda t, e: verify_perspector_concurrency(t, e[0]),
            _gen_feet_finite,
            lambda t, e: _proper(t, e) and _feet_finite(e[0]),
        ),
        Property("symmedian_orthic_midpoints", "non-right", lambda t, e: verify_lemma_symmedian_midpoints(t)),
        Property("chord_pole_center", "any", _check_chord, _gen_chord, _chord_valid),
        Property("altitude_midline", "non-right", lambda t, e: verify_lemma_altitude_midline(t)),
        Property("orthic_center", "acute", lambda t, e: verify_thm1_orthic_center(t)),
        Property("symmedian_complement_isotomic_H", "non-right", lambda t, e: verify_thm2_K_is_complement_isotomic_H(t)),
        Property(
            "inconic_center_formula",
            "any",
            lambda t, e: verify_thm3_center_formula(t, e[0]),
            _gen_center_formula,
            _proper,
        ),
        Property("lemoine_hexagon", "acute", lambda t, e: verify_hexagon_lemma(t)),
        Property(
            "unique_fixed_point",
            "any",
            lambda t, e: verify_corollary_steiner_fixed_point(e),
            _gen_non_centroid,
            lambda t, e: _proper(t, e) and CENTROID not in e,
        ),
        Property(
            "contact_chord_center",
            "any",
            lambda t, e: verify_contact_chord_center(e[0]),
            _gen_central,
            lambda t, e: _proper(t, e) and _feet_finite(e[0]) and _central(e[0]),
        ),
    ]
}


# -- running -----------------------------------------------------------------


@dataclass
class VerdictReport:
    name: str
    attempted: int
    passed: int
    seed: int
    shape: str
    counterexample: Optional[dict] = None
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self):
        assert self.passed <= self.attempted
        assert (self.counterexample is not None) == (self.passed < self.attempted)

    @property
    def ok(self) -> bool:
        return self.passed == self.attempted

    def row(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name:<32} {self.shape:<10} {self.passed:>6}/{self.attempted:<6} {status}"


def _evaluate(prop: Property, t: TriangleRef, extras: tuple) -> Tuple[bool, Optional[str]]:
    try:
        return bool(prop.check(t, extras)), None
    except GeometryError as exc:
        return False, f"{type(exc).__name__}: {exc}"


def _trial_inputs(name: str, seed: int, shape: str, bound: int, index: int):
    prop = PROPERTIES[name]
    rng = random.Random(f"{seed}:{name}:{index}")
    t = TriangleSampler(seed, bound, _stricter(shape, prop.min_shape)).draw(rng)
    return t, prop.generate(rng, t)


def _run_trial(args) -> Tuple[bool, Optional[str]]:
    name, seed, shape, bound, index = args
    t, extras = _trial_inputs(name, seed, shape, bound, index)
    return _evaluate(PROPERTIES[name], t, extras)


def _halve(v: int) -> int:
    h = abs(v) // 2
    return h if v >= 0 else -h


def _halve_nonzero(v: int) -> int:
    return _halve(v) or (1 if v > 0 else -1)


def shrink(prop: Property, shape: str, t: TriangleRef, extras: tuple, max_rounds: int = 64):
    """Halve coordinate magnitudes while the inputs stay valid and the property still fails."""
    sampler = TriangleSampler(shape=_stricter(shape, prop.min_shape))

    def failing(cand_t, cand_e) -> bool:
        if not sampler.accepts(cand_t) or not prop.valid(cand_t, cand_e):
            return False
        return not _evaluate(prop, cand_t, cand_e)[0]

    for _ in range(max_rounds):
        improved = False
        for i in range(3):
            pts = [list(v) for v in t.vertices]
            if all(c == 0 for c in pts[i]):
                continue
            pts[i] = [_halve(c) for c in pts[i]]
            try:
                cand = TriangleRef.from_points(pts)
            except GeometryError:
                continue
            if cand != t and failing(cand, extras):
                t, improved = cand, True
        for j, p in enumerate(extras):
            smaller = HPoint(_halve_nonzero(c) if c else 0 for c in p.coords)
            if smaller == p:
                continue
            cand_e = extras[:j] + (smaller,) + extras[j + 1:]
            if failing(t, cand_e):
                extras, improved = cand_e, True
        if not improved:
            break
    return t, extras


def _witness(t: TriangleRef, extras: tuple) -> dict:
    return {
        "triangle": [[str(c) for c in v] for v in t.vertices],
        "points": [str(p) for p in extras],
    }


def run_property(
    name: str,
    seed: int = 0,
    trials: int = 100,
    shape: str = "any",
    bound: int = 100,
    workers: int = 1,
) -> VerdictReport:
    """Evaluate one property on ``trials`` seeded samples; stops at the first failure.

    Trial ``i`` depends only on ``(seed, name, i)``, so results are identical
    whatever ``workers`` is.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    prop = PROPERTIES[name]
    eff_shape = _stricter(shape, prop.min_shape)
    start = time.perf_counter()
    jobs = [(name, seed, shape, bound, i) for i in range(trials)]
    failure = None
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_trial, jobs, chunksize=max(1, trials // (4 * workers))))
        failure = next((i for i, (ok, _) in enumerate(results) if not ok), None)
        error = results[failure][1] if failure is not None else None
    else:
        error = None
        for i, job in enumerate(jobs):
            ok, error = _run_trial(job)
            if not ok:
                failure = i
                break
    counterexample = None
    if failure is None:
        attempted = passed = trials
    else:
        attempted, passed = failure + 1, failure
        t, extras = _trial_inputs(name, seed, shape, bound, failure)
        small_t, small_e = shrink(prop, shape, t, extras)
        counterexample = {
            "trial": failure,
            "error": error,
            "original": _witness(t, extras),
            "shrunk": _witness(small_t, small_e),
        }
    return VerdictReport(
        name, attempted, passed, seed, eff_shape, counterexample, time.perf_counter() - start
    )


def run_suite(
    seed: int = 0,
    trials: int = 100,
    shape: str = "any",
    bound: int = 100,
    workers: int = 1,
    properties: Optional[Sequence[str]] = None,
) -> List[VerdictReport]:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if shape not in SHAPES:
        raise ValueError(f"unknown shape filter {shape!r}")
    names = list(properties) if properties else list(PROPERTIES)
    return [run_property(n, seed, trials, shape, bound, workers) for n in names]
