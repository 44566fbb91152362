"""Acceptance gate: one test per criterion, each logging a single PASS/FAIL line."""

import random
import subprocess
import sys
import time
import xml.etree.ElementTree as ET

from inconic import affine, centers, conics, verify
from inconic.kernel import CENTROID, HPoint, TriangleRef
from inconic.verify import TriangleSampler, sample_parabolic_perspector, sample_perspector

TOL = 1e-9


def sampler(shape, seed):
    return TriangleSampler(shape=shape), random.Random(f"acceptance:{seed}")


def test_criterion_1_center_formula(acceptance_log):
    tris, rng = sampler("any", 1)
    ok = parabolas = 0
    for i in range(1000):
        t = tris.draw(rng)
        p = sample_parabolic_perspector(rng) if i % 10 == 0 else sample_perspector(rng)
        gamma = conics.inconic_from_perspector(p)
        predicted = centers.complement(centers.isotomic_conjugate(p))
        if conics.classify(gamma) is conics.ConicClass.PARABOLA:
            parabolas += 1
            ok += sum(predicted.coords) == 0
        else:
            ok += conics.conic_center(gamma) == predicted and verify.verify_thm3_center_formula(t, p)
    passed = ok == 1000 and parabolas > 0
    acceptance_log(1, f"inconic centre = complement(isotomic(P)): {ok}/1000, {parabolas} parabolas", passed)
    assert passed


def test_criterion_2_orthic_center(acceptance_log):
    tris, rng = sampler("acute", 2)
    ok = 0
    for _ in range(1000):
        t = tris.draw(rng)
        ok += conics.conic_center(conics.orthic_conic(t)) == HPoint(t.a2, t.b2, t.c2)
    ref = TriangleRef((0, 0), (4, 0), (1, 3))
    instance = conics.conic_center(conics.orthic_conic(ref)) == HPoint(9, 5, 8)
    passed = ok == 1000 and instance
    acceptance_log(2, f"orthic conic centre = (a2:b2:c2): {ok}/1000 acute, reference (9:5:8) {instance}", passed)
    assert passed


def test_criterion_3_symmedian_as_complement(acceptance_log):
    tris, rng = sampler("non-right", 3)
    ok = g_checks = 0
    for _ in range(1000):
        t = tris.draw(rng)
        ok += verify.verify_thm2_K_is_complement_isotomic_H(t)
        g_checks += sum(g == CENTROID for g in verify.median_meet_points(t) if g is not None)
    passed = ok == 1000
    acceptance_log(3, f"K = complement(isotomic(H)): {ok}/1000 non-right, {g_checks} G' = G checks", passed)
    assert passed


def test_criterion_4_lemmas(acceptance_log):
    tris, rng = sampler("acute", 4)
    symmedian_ok = midline_ok = 0
    for _ in range(1000):
        t = tris.draw(rng)
        symmedian_ok += verify.verify_lemma_symmedian_midpoints(t)
        midline_ok += verify.verify_lemma_altitude_midline(t)
    chords = verify.run_property("chord_pole_center", seed=4, trials=1000)
    passed = symmedian_ok == 1000 and midline_ok == 1000 and chords.ok and chords.attempted == 1000
    acceptance_log(
        4,
        f"lemmas: symmedian midpoints {symmedian_ok}/1000, altitude midline {midline_ok}/1000, "
        f"chord pole {chords.passed}/1000",
        passed,
    )
    assert passed


def test_criterion_5_hexagon(acceptance_log):
    tris, rng = sampler("acute", 5)
    ok = sum(verify.verify_hexagon_lemma(tris.draw(rng)) for _ in range(500))
    acceptance_log(5, f"Lemoine hexagon: equal radii, parallel sides, tangent to orthic conic: {ok}/500", ok == 500)
    assert ok == 500


def test_criterion_6_unique_fixed_point(acceptance_log):
    rng = random.Random("acceptance:6")
    sample = []
    while len(sample) < 1000:
        p = sample_perspector(rng)
        if p != CENTROID:
            sample.append(p)
    moved = sum(verify.center_map(p) != p for p in sample)
    fixed_g = verify.center_map(CENTROID) == CENTROID
    passed = moved == 1000 and fixed_g
    acceptance_log(6, f"G is the only fixed point: {moved}/1000 moved, G fixed {fixed_g}", passed)
    assert passed


def test_criterion_7_affine_reduction(acceptance_log):
    tris, rng = sampler("acute", 7)
    worst_reduction = 0.0
    for _ in range(100):
        t = tris.draw(rng)
        res = affine.lemoine_reduction(t, centers.orthocenter(t))
        worst_reduction = max(worst_reduction, res["radius_spread"], res["center_vs_symmedian"])

    tris, rng = sampler("any", 77)
    worst_invariant = 0.0
    pairs = 0
    while pairs < 1000:
        t = tris.draw(rng)
        p = sample_perspector(rng)
        if not centers.isotomic_conjugate(p).is_finite or conics.on_conic(conics.steiner_circumellipse(), p):
            continue
        report = affine.verify_affine_invariants(affine.random_map(rng), t, p)
        worst_invariant = max(worst_invariant, *report.residuals.values())
        pairs += 1
    passed = worst_reduction < TOL and worst_invariant < TOL
    acceptance_log(
        7,
        f"affine reduction: worst spread/centre {worst_reduction:.1e} over 100, "
        f"worst invariant residual {worst_invariant:.1e} over 1000",
        passed,
    )
    assert passed


def test_criterion_8_contact_chord_center(acceptance_log):
    rng = random.Random("acceptance:8")
    ok = 0
    for _ in range(1000):
        props = verify.PROPERTIES["contact_chord_center"]
        (p,) = props.generate(rng, None)
        ok += verify.verify_contact_chord_center(p)
    acceptance_log(8, f"contact-chord lines meet at the matrix centre: {ok}/1000", ok == 1000)
    assert ok == 1000


def test_criterion_9_cli_smoke(acceptance_log, tmp_path):
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "inconic", "verify", "--seed", "1", "--trials", "200"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    elapsed = time.perf_counter() - start
    parsed = 0
    for fig_id in range(1, 8):
        out = tmp_path / f"fig{fig_id}.svg"
        fig = subprocess.run(
            [sys.executable, "-m", "inconic", "figure", "--id", str(fig_id), "--out", str(out)],
            capture_output=True,
            text=True,
            timeout=60,
        )
        if fig.returncode == 0:
            ET.parse(out)
            parsed += 1
    passed = proc.returncode == 0 and elapsed < 60 and parsed == 7
    acceptance_log(9, f"CLI verify exit {proc.returncode} in {elapsed:.1f}s, {parsed}/7 figures parse", passed)
    assert passed, proc.stdout + proc.stderr
