"""``bregkern`` command line.

Exit status: 0 on success, 1 for invalid input or arguments, 2 when a
numerical routine fails to converge.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from bregkern.cli.demos import DEMOS, DemoOptions, run_demo
from bregkern.cli.io import ingest_points, parse_tag, pgm_histogram
from bregkern.core.coords import THETA, DualCoordinate
from bregkern.errors import ArgumentError, BregkernError, ConvergenceError
from bregkern.geometry.ball import EKLBallCurve
from bregkern.geometry.bisector import BregmanBisector
from bregkern.geometry.geodesic import BregmanGeodesic
from bregkern.manifolds import EKL2DManifold, manifold_from_spec
from bregkern.measures.chernoff import chernoff_information
from bregkern.measures.divergence import bregman_divergence, fenchel_young_divergence, skew_jensen_divergence
from bregkern.report.png import render_png
from bregkern.report.scene import Scene
from bregkern.report.svg import export_scene
from bregkern.report.tables import format_number

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NUMERICAL = 2


class _Parser(argparse.ArgumentParser):
    # usage errors are validation errors, not numerical ones
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _index_pair(text):
    try:
        i, j = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two comma-separated integers, got {text!r}") from None
    return i, j


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bregkern", description="Bregman manifold computations and figures.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("demo", help="run a demonstration scenario")
    d.add_argument("name", choices=sorted(DEMOS))
    d.add_argument("--out", default=".", help="output directory (default: current)")
    d.add_argument("--iters", type=int, default=5, help="AHM iterations (ahm)")
    d.add_argument("--alpha", type=float, default=0.5, help="skew parameter in (0, 1) (histogram-centroids)")
    d.add_argument("--left", help="first histogram file (histogram-centroids)")
    d.add_argument("--right", help="second histogram file (histogram-centroids)")
    d.add_argument("--no-png", dest="png", action="store_false", help="skip the matplotlib PNG")

    v = sub.add_parser("div", help="divergences between paired points")
    v.add_argument("--manifold", required=True, help="e.g. gaussian:1, categorical:3, psd:2, ekl2d")
    v.add_argument("--coords", default="lambda", help="tag for records written without one")
    v.add_argument("--left", required=True)
    v.add_argument("--right", required=True)
    v.add_argument("--kind", choices=("bregman", "fy", "jensen", "chernoff"), default="bregman")
    v.add_argument("--dcoords", default="theta", help="theta or eta generator (bregman, jensen)")
    v.add_argument("--alpha", type=float, default=0.0, help="skew in [-1, 1] (jensen)")

    h = sub.add_parser("hist-from-pgm", help="256-bin intensity counts of a binary PGM image")
    h.add_argument("file")
    h.add_argument("--out", help="write counts here instead of stdout")

    e = sub.add_parser("export", help="draw points, geodesics, bisectors, balls and Tissot ellipses")
    e.add_argument("--manifold", required=True)
    e.add_argument("--points", required=True, help="points file")
    e.add_argument("--coords", default="lambda")
    e.add_argument("--display", default="lambda", help="display coordinates")
    e.add_argument("--index", type=_index_pair, default=(0, 1), help="projected coordinates, e.g. 0,1")
    e.add_argument("--geodesics", choices=("none", "primal", "dual", "both"), default="none",
                   help="geodesics between consecutive points")
    e.add_argument("--bisector", choices=("none", "primal", "dual"), default="none",
                   help="bisector of the first two points")
    e.add_argument("--ball", type=float, help="radius of the Bregman sphere around each point (ekl2d)")
    e.add_argument("--tissot", type=float, help="Tissot ellipse scale at each point")
    e.add_argument("--out", required=True, help="SVG path")
    e.add_argument("--png", help="also write a PNG here")
    return parser


def _cmd_demo(args, out):
    opts = DemoOptions(iters=args.iters, alpha=args.alpha, left=args.left, right=args.right, png=args.png)
    result = run_demo(args.name, args.out, opts)
    print(result.summary(), file=out)


def _cmd_div(args, out):
    m = manifold_from_spec(args.manifold)
    coords = parse_tag(args.coords)
    left = ingest_points(args.left, coords, m)
    right = ingest_points(args.right, coords, m)
    if len(left) != len(right):
        raise ArgumentError(f"left has {len(left)} points but right has {len(right)}")
    dc = DualCoordinate.parse(args.dcoords)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["index", "value"])
    for i, (p, q) in enumerate(zip(left, right)):
        if args.kind == "bregman":
            val = bregman_divergence(m, p, q, dc)
        elif args.kind == "fy":
            val = fenchel_young_divergence(m, p, q)
        elif args.kind == "jensen":
            val = skew_jensen_divergence(m, p, q, args.alpha, dc)
        else:
            val = chernoff_information(m, p, q)
        w.writerow([i, format_number(val)])


def _cmd_hist(args, out):
    counts = pgm_histogram(args.file)
    text = "".join(f"{int(c)}\n" for c in counts)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def _cmd_export(args, out):
    m = manifold_from_spec(args.manifold)
    pts = ingest_points(args.points, parse_tag(args.coords), m)
    scene = Scene(m, parse_tag(args.display), args.index, title=args.manifold)
    colors = {"primal": "red", "dual": "blue"}
    kinds = ("primal", "dual") if args.geodesics == "both" else (() if args.geodesics == "none" else (args.geodesics,))
    for kind in kinds:
        dc = DualCoordinate.PRIMAL if kind == "primal" else DualCoordinate.DUAL
        for k, (a, b) in enumerate(zip(pts, pts[1:])):
            scene.add_curve(BregmanGeodesic(m, a, b, dc), color=colors[kind],
                            label=f"{kind} geodesic" if k == 0 else None, kind="geodesic")
    if args.bisector != "none":
        if len(pts) < 2:
            raise ArgumentError("a bisector needs at least two points")
        dc = DualCoordinate.PRIMAL if args.bisector == "primal" else DualCoordinate.DUAL
        bis = BregmanBisector(m, pts[0], pts[1], dc)
        axis = bis.sweep_axis(args.index)
        vals = [m.coords(p, dc.tag)[axis] for p in pts]
        pad = max(0.5 * (max(vals) - min(vals)), 1e-3)
        scene.add_polyline(bis.sample_line(args.index, min(vals) - pad, max(vals) + pad), color=colors[args.bisector],
                           opacity=0.7, label=f"{args.bisector} bisector", kind="bisector")
    if args.ball is not None:
        if not isinstance(m, EKL2DManifold):
            raise ArgumentError("--ball is available for the ekl2d manifold")
        for p in pts:
            scene.add_curve(EKLBallCurve(m.convert(p, THETA), args.ball), color="green", kind="ball")
    for p in pts:
        scene.add_point(p)
        if args.tissot is not None:
            scene.add_tissot(p, scale=args.tissot)
    export_scene(scene, args.out)
    if args.png:
        render_png(scene, args.png)
    print(f"wrote {args.out}", file=out)


COMMANDS = {"demo": _cmd_demo, "div": _cmd_div, "hist-from-pgm": _cmd_hist, "export": _cmd_export}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args, out)
    except (ConvergenceError, ArithmeticError) as exc:
        print(f"bregkern: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"bregkern: I/O error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (BregkernError, ValueError) as exc:
        print(f"bregkern: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
