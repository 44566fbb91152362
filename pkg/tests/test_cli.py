import json
import math
import xml.etree.ElementTree as ET

import pytest

from inconic import cli, verify
from inconic.kernel import HPoint

SVG = "{http://www.w3.org/2000/svg}"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def labeled_points(root):
    return {
        c.get("data-label"): (float(c.get("cx")), float(c.get("cy")))
        for c in root.iter(SVG + "circle")
        if c.get("class") == "point"
    }


def line_distance(line, pt):
    x1, y1, x2, y2 = (float(line.get(k)) for k in ("x1", "y1", "x2", "y2"))
    cross = (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1)
    return abs(cross) / math.hypot(x2 - x1, y2 - y1)


def figure(tmp_path, capsys, fig_id, *extra):
    out = tmp_path / f"fig{fig_id}.svg"
    code, _, err = run(capsys, "figure", "--id", str(fig_id), "--out", str(out), *extra)
    assert code == 0, err
    return out.read_text(encoding="utf-8")


class TestInconicCommand:
    def test_orthocenter(self, capsys):
        code, out, _ = run(capsys, "inconic", "--perspector", "H")
        assert code == 0
        assert "center: (9:5:8)" in out
        assert "class: Ellipse" in out
        assert "theorem check: PASS" in out

    def test_explicit_perspector(self, capsys):
        code, out, _ = run(capsys, "inconic", "--perspector", "1:2:3")
        assert code == 0
        # complement of the isotomic conjugate (6:3:2)
        assert "center: (5:8:9)" in out

    def test_parabola(self, capsys):
        code, out, _ = run(capsys, "inconic", "--perspector", "2:2:-1")
        assert code == 0
        assert "class: Parabola" in out and "at infinity" in out

    def test_vertex_perspector_is_degenerate(self, capsys):
        code, _, err = run(capsys, "inconic", "--perspector", "1:0:0")
        assert code == 2
        assert "degenerate perspector" in err

    def test_bad_point(self, capsys):
        code, _, err = run(capsys, "inconic", "--perspector", "1:2")
        assert code == 2 and "error" in err

    def test_float_triangle_rejected(self, capsys):
        code, _, err = run(capsys, "inconic", "--perspector", "G", "--triangle", "[[0,0],[1.5,0],[0,1]]")
        assert code == 2 and "floats" in err

    def test_degenerate_triangle(self, capsys):
        code, _, err = run(capsys, "inconic", "--perspector", "G", "--triangle", "[[0,0],[1,1],[2,2]]")
        assert code == 2 and "degenerate triangle" in err

    def test_triangle_file_with_rationals(self, tmp_path, capsys):
        path = tmp_path / "tri.json"
        path.write_text(json.dumps({"A": [0, 0], "B": ["7/2", 0], "C": [1, "5/3"]}), encoding="utf-8")
        code, out, _ = run(capsys, "inconic", "--perspector", "K", "--triangle", str(path))
        assert code == 0
        assert "B=(7/2, 0)" in out and "theorem check: PASS" in out


class TestPerspectorCommand:
    def test_symmedian_center(self, capsys):
        code, out, _ = run(capsys, "perspector", "--center", "K")
        assert code == 0
        # orthocentre of (0,0),(4,0),(1,3) is (1,1)
        assert "perspector: (3:1:2)  cartesian (1, 1)" in out
        assert "round trip: PASS" in out

    def test_vertex_center_gives_hyperbola(self, capsys):
        code, out, _ = run(capsys, "perspector", "--center", "1:0:0")
        assert code == 0
        assert "perspector: (1:-1:-1)" in out and "class: Hyperbola" in out

    def test_side_midpoint_has_no_perspector(self, capsys):
        code, _, err = run(capsys, "perspector", "--center", "1:1:0")
        assert code == 2 and "no valid perspector" in err


class TestVerifyCommand:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--seed", "1", "--trials", "10")
        assert code == 0
        rows = [line for line in out.splitlines() if line.endswith("PASS")]
        assert len(rows) == len(verify.PROPERTIES)
        assert out.strip().endswith("all properties verified")

    def test_deterministic(self, capsys):
        first = run(capsys, "verify", "--seed", "4", "--trials", "10")
        second = run(capsys, "verify", "--seed", "4", "--trials", "10")
        assert first == second

    def test_zero_trials(self, capsys):
        code, _, err = run(capsys, "verify", "--trials", "0")
        assert code == 2 and "--trials" in err

    def test_injected_bug(self, capsys, monkeypatch):
        def wrong(p):
            x, y, z = p.coords
            return HPoint(y + z, z + x, x + 2 * y)

        monkeypatch.setattr(verify, "complement", wrong)
        code, out, _ = run(capsys, "verify", "--trials", "20")
        assert code == 1
        assert "counterexample for inconic_center_formula" in out
        assert '"shrunk"' in out


class TestFigureCommand:
    @pytest.mark.parametrize("fig_id", range(1, 8))
    def test_well_formed(self, tmp_path, capsys, fig_id):
        root = ET.fromstring(figure(tmp_path, capsys, fig_id))
        assert root.tag == SVG + "svg"
        for path in root.iter(SVG + "path"):
            assert int(path.get("data-samples")) >= 128
            assert path.get("d").count("L") >= 127

    def test_deterministic(self, tmp_path, capsys):
        a = figure(tmp_path, capsys, 1)
        b = figure(tmp_path, capsys, 1)
        assert a == b

    def test_contact_chord_lines_concur(self, tmp_path, capsys):
        root = ET.fromstring(figure(tmp_path, capsys, 2, "--perspector", "2:3:4"))
        center = labeled_points(root)["Ω"]
        lines = [
            e for e in root.iter(SVG + "line") if e.get("data-name", "").startswith("chord-midpoint line")
        ]
        assert len(lines) == 3
        assert all(line_distance(line, center) < 0.01 for line in lines)

    def test_lemoine_circle_through_hexagon(self, tmp_path, capsys):
        root = ET.fromstring(figure(tmp_path, capsys, 5))
        circle = next(c for c in root.iter(SVG + "circle") if c.get("class") == "circle")
        cx, cy, r = (float(circle.get(k)) for k in ("cx", "cy", "r"))
        pts = labeled_points(root)
        names = ["A1", "A2", "B1", "B2", "C1", "C2"]
        assert all(abs(math.hypot(pts[n][0] - cx, pts[n][1] - cy) - r) < 0.01 for n in names)
        assert abs(pts["K"][0] - cx) < 0.01 and abs(pts["K"][1] - cy) < 0.01

    def test_bad_id(self, tmp_path, capsys):
        code, _, err = run(capsys, "figure", "--id", "9", "--out", str(tmp_path / "x.svg"))
        assert code == 2

    def test_empty_out(self, capsys):
        code, _, err = run(capsys, "figure", "--id", "1", "--out", "")
        assert code == 2

    def test_right_triangle_orthic_figure(self, tmp_path, capsys):
        code, _, err = run(
            capsys, "figure", "--id", "4", "--out", str(tmp_path / "x.svg"), "--triangle", "[[0,0],[2,0],[1,1]]"
        )
        assert code == 2 and "degenerate orthic" in err
