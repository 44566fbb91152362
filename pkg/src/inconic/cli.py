"""Command-line entry point.

Exit codes: 0 success, 1 a verified property was falsified, 2 bad input or
a degenerate configuration.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import List, Optional

from . import centers, conics, figures, verify
from .kernel import GeometryError, HPoint, TriangleRef, bary_to_cartesian, to_scalar

DEFAULT_TRIANGLE = ((0, 0), (4, 0), (1, 3))


class UsageError(Exception):
    pass


def load_triangle(arg: Optional[str]) -> TriangleRef:
    """Triangle from a JSON file or inline JSON.

    Accepts ``{"A": [x, y], "B": [...], "C": [...]}``, ``{"vertices": [[x, y], ...]}``
    or a bare list of three pairs; coordinates are ints or rational strings.
    """
    if arg is None:
        return TriangleRef.from_points(DEFAULT_TRIANGLE)
    path = Path(arg)
    text = path.read_text(encoding="utf-8") if path.is_file() else arg
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"triangle is neither a JSON file nor inline JSON: {exc}") from None
    if isinstance(data, dict):
        pts = data["vertices"] if "vertices" in data else [data[k] for k in "ABC"]
    else:
        pts = data
    if len(pts) != 3 or any(len(p) != 2 for p in pts):
        raise UsageError("triangle needs three [x, y] vertices")
    for p in pts:
        for c in p:
            if isinstance(c, float):
                raise UsageError("use integers or rational strings such as \"3/7\", not floats")
    return TriangleRef.from_points([[to_scalar(c) for c in p] for p in pts])


def parse_point(text: str, t: TriangleRef) -> HPoint:
    """``"p:q:r"`` with rational entries, or one of the names G, H, K."""
    named = {
        "G": lambda: HPoint(1, 1, 1),
        "H": lambda: centers.orthocenter(t),
        "K": lambda: centers.symmedian_point(t),
    }
    key = text.strip()
    if key.upper() in named:
        return named[key.upper()]()
    parts = re.split(r"[:,\s]+", key.strip("()"))
    if len(parts) != 3:
        raise UsageError(f"expected 'p:q:r', got {text!r}")
    try:
        return HPoint(*(to_scalar(p) for p in parts))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad point {text!r}: {exc}") from None


def _fmt_cart(t: TriangleRef, p: HPoint) -> str:
    if not p.is_finite:
        return "at infinity"
    x, y = bary_to_cartesian(t, p)
    return f"({x}, {y})"


def _triangle_line(t: TriangleRef) -> str:
    return "triangle: " + "  ".join(f"{n}=({v[0]}, {v[1]})" for n, v in zip("ABC", t.vertices))


def cmd_inconic(args) -> int:
    t = load_triangle(args.triangle)
    p = parse_point(args.perspector, t)
    gamma = conics.inconic_from_perspector(p)
    kind = conics.classify(gamma)
    predicted = centers.complement(centers.isotomic_conjugate(p))
    out = [
        _triangle_line(t),
        f"perspector: {p}  cartesian {_fmt_cart(t, p)}",
        f"conic matrix: {gamma}",
        f"class: {kind}",
        "tangency points:",
    ]
    for name, f in zip(("BC", "CA", "AB"), centers.cevian_feet(p)):
        out.append(f"  {name}: {f}  cartesian {_fmt_cart(t, f)}")
    if kind is conics.ConicClass.PARABOLA:
        out.append(f"center: at infinity, direction {predicted}")
        ok = not predicted.is_finite
    else:
        center = conics.conic_center(gamma)
        out.append(f"center: {center}  cartesian {_fmt_cart(t, center)}")
        ok = center == predicted
    out.append(f"complement(isotomic(P)): {predicted}")
    out.append(f"theorem check: {'PASS' if ok else 'FAIL'}")
    print("\n".join(out))
    return 0 if ok else 1


def cmd_perspector(args) -> int:
    t = load_triangle(args.triangle)
    center = parse_point(args.center, t)
    p = centers.perspector_from_center(center)
    gamma = conics.inconic_from_perspector(p)
    back = conics.conic_center(gamma)
    ok = back == center
    print(
        "\n".join(
            [
                _triangle_line(t),
                f"center: {center}  cartesian {_fmt_cart(t, center)}",
                f"perspector: {p}  cartesian {_fmt_cart(t, p)}",
                f"class: {conics.classify(gamma)}",
                f"round trip: {'PASS' if ok else 'FAIL'}",
            ]
        )
    )
    return 0 if ok else 1


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    reports = verify.run_suite(
        seed=args.seed, trials=args.trials, shape=args.shape, bound=args.bound, workers=args.workers
    )
    print(f"seed {args.seed}  trials {args.trials}  shape {args.shape}  bound {args.bound}")
    for r in reports:
        line = r.row()
        if args.timing:
            line += f"  {r.elapsed:.2f}s"
        print(line)
    failed = [r for r in reports if not r.ok]
    if failed:
        for r in failed:
            print(f"counterexample for {r.name}:")
            print(json.dumps(r.counterexample, indent=2, sort_keys=True))
        return 1
    print("all properties verified")
    return 0


def cmd_figure(args) -> int:
    if not args.out:
        raise UsageError("--out must name a file")
    if args.id not in figures.FIGURE_IDS:
        raise UsageError("--id must be in 1..7")
    t = load_triangle(args.triangle)
    p = parse_point(args.perspector, t) if args.perspector else None
    svg = figures.render_figure(args.id, t, p)
    Path(args.out).write_text(svg, encoding="utf-8")
    print(f"wrote figure {args.id} to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="inconic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inconic", help="inscribed conic of a perspector")
    p.add_argument("--triangle", help="JSON file or inline JSON with three vertices")
    p.add_argument("--perspector", required=True, help="'p:q:r' or G/H/K")
    p.set_defaults(func=cmd_inconic)

    p = sub.add_parser("perspector", help="perspector of the inconic with a given centre")
    p.add_argument("--triangle")
    p.add_argument("--center", required=True, help="'u:v:w' or G/H/K")
    p.set_defaults(func=cmd_perspector)

    p = sub.add_parser("verify", help="run the randomized theorem suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--shape", choices=verify.SHAPES, default="any")
    p.add_argument("--bound", type=int, default=100, help="triangle coordinate bound")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="append per-property wall time")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", help="write an SVG figure")
    p.add_argument("--id", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--triangle")
    p.add_argument("--perspector")
    p.set_defaults(func=cmd_figure)
    return parser


def _describe(exc: Exception) -> str:
    words = re.sub(r"(?<!^)(?=[A-Z])", " ", type(exc).__name__).lower()
    return f"{words}: {exc}"


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except GeometryError as exc:
        print(f"error: {_describe(exc)}", file=sys.stderr)
    except (OSError, KeyError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {_describe(exc)}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
