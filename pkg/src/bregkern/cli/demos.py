"""The four demonstration scenarios behind ``bregkern demo``.

Each demo writes ``<name>.svg`` and ``<name>.csv`` (plus ``<name>.png``
unless disabled) into the output directory and returns its scalars so the
caller can print them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from bregkern.cli.io import ingest_histogram
from bregkern.core.coords import ETA, LAMBDA, DualCoordinate, Point
from bregkern.errors import ArgumentError, InputError
from bregkern.geometry.bisector import BregmanBisector
from bregkern.geometry.geodesic import BregmanGeodesic
from bregkern.linalg import spd_geometric_mean
from bregkern.manifolds.categorical import CategoricalManifold, smooth_histogram
from bregkern.manifolds.gaussian import GaussianManifold, fisher_rao_geodesic, gaussian_kl
from bregkern.manifolds.psd import PSDManifold
from bregkern.measures.ahm import inductive_midpoint_mean
from bregkern.measures.barycenter import dual_barycenter, skew_burbea_rao_barycenter, skew_burbea_rao_objective
from bregkern.measures.chernoff import chernoff_information, chernoff_point, equidistance_residual
from bregkern.measures.divergence import bhattacharyya_distance, bregman_divergence, skew_jensen_divergence
from bregkern.report.png import render_png
from bregkern.report.scene import Scene
from bregkern.report.svg import export_scene
from bregkern.report.tables import write_csv

PRIMAL = DualCoordinate.PRIMAL
DUAL = DualCoordinate.DUAL

# Default bivariate normals for the centroids demo.
CENTROID_INPUTS = (
    ((0.0, 0.0), ((1.0, 0.4), (0.4, 0.6))),
    ((2.5, 1.0), ((0.5, -0.2), (-0.2, 1.2))),
)
AHM_INPUTS = ((1.0, 0.5, 2.0), (1.0, 0.0, 0.5))
CHERNOFF_INPUTS = ((0.0, 1.0), (1.0, 1.5))
CHERNOFF_TISSOT_SCALE = 0.1


@dataclass
class DemoOptions:
    iters: int = 5
    alpha: float = 0.5
    left: str | None = None
    right: str | None = None
    png: bool = True


@dataclass
class DemoResult:
    name: str
    scalars: list = field(default_factory=list)
    files: list = field(default_factory=list)

    def add(self, key, value):
        self.scalars.append((key, float(value)))

    def summary(self) -> str:
        lines = [f"{self.name}:"]
        lines += [f"  {k} = {v:.6g}" for k, v in self.scalars]
        lines += [f"  wrote {f}" for f in self.files]
        return "\n".join(lines)


def _write_figures(scene: Scene, out: Path, stem: str, result: DemoResult, png: bool):
    result.files.append(export_scene(scene, out / f"{stem}.svg"))
    if png:
        result.files.append(render_png(scene, out / f"{stem}.png"))


def synthetic_histograms(k: int = 256):
    """Two smooth bimodal intensity histograms used when no files are given."""
    x = np.arange(k, dtype=float)

    def bump(c, w, h):
        return h * np.exp(-0.5 * ((x - c * k / 256.0) / (w * k / 256.0)) ** 2)

    h1 = np.rint(bump(70, 18, 900) + bump(170, 30, 400))
    h2 = np.rint(bump(110, 25, 600) + bump(215, 12, 700))
    return smooth_histogram(h1), smooth_histogram(h2)


def demo_centroids(out: Path, opts: DemoOptions) -> DemoResult:
    g = GaussianManifold(2)
    p, q = (g.point(mu, cov) for mu, cov in CENTROID_INPUTS)
    result = DemoResult("centroids")

    left_kl = Point(LAMBDA, g.coords(dual_barycenter(g, [p, q], dc=PRIMAL), LAMBDA))
    right_kl = Point(LAMBDA, g.coords(dual_barycenter(g, [p, q], dc=DUAL), LAMBDA))
    bhat = Point(LAMBDA, g.coords(skew_burbea_rao_barycenter(g, [p, q], alpha=0.5, dc=PRIMAL), LAMBDA))
    fr_geo = fisher_rao_geodesic(g, p, q)
    fisher_rao = fr_geo(0.5)
    centroids = (
        ("left_kl", left_kl, "red", "left-sided KL centroid"),
        ("right_kl", right_kl, "blue", "right-sided KL centroid"),
        ("bhattacharyya", bhat, "green", "Bhattacharyya centroid"),
        ("fisher_rao", fisher_rao, "purple", "Fisher-Rao midpoint"),
    )

    result.add("kl_p_q", gaussian_kl(g, p, q))
    result.add("kl_q_p", gaussian_kl(g, q, p))
    result.add("bhattacharyya_distance", bhattacharyya_distance(g, p, q))
    for key, c, _, _ in centroids:
        result.add(f"{key}_kl_sum_to", gaussian_kl(g, c, p) + gaussian_kl(g, c, q))
        result.add(f"{key}_kl_sum_from", gaussian_kl(g, p, c) + gaussian_kl(g, q, c))

    scene = Scene(g, LAMBDA, (0, 1), title="Centroids of two bivariate normals", axis_labels=("mu1", "mu2"))
    scene.add_curve(BregmanGeodesic(g, p, q, PRIMAL), color="red", opacity=0.4, kind="geodesic")
    scene.add_curve(BregmanGeodesic(g, p, q, DUAL), color="blue", opacity=0.4, kind="geodesic")
    scene.add_curve(fr_geo, color="purple", opacity=0.4, kind="geodesic")
    for pt, name in ((p, "input 1"), (q, "input 2")):
        scene.add_point(pt, color="black", label=name)
        scene.add_tissot(pt, scale=1.0, color="black", opacity=0.6)
    for key, c, color, label in centroids:
        scene.add_point(c, color=color, label=label)
        scene.add_tissot(c, scale=1.0, color=color, opacity=0.6)
    rows = []
    for key, c in (("input_1", p), ("input_2", q), *((k, c) for k, c, _, _ in centroids)):
        mu, cov = g.mean_cov(c)
        rows.append([key, mu[0], mu[1], cov[0, 0], cov[0, 1], cov[1, 1]])

    result.files.append(write_csv(out / "centroids.csv", ["name", "mu1", "mu2", "sigma11", "sigma12", "sigma22"], rows))
    _write_figures(scene, out, "centroids", result, opts.png)
    return result


def demo_ahm(out: Path, opts: DemoOptions) -> DemoResult:
    m = PSDManifold(2)
    p, q = (Point(LAMBDA, v) for v in AHM_INPUTS)
    oracle = spd_geometric_mean(m.matrix(p), m.matrix(q))
    history = []
    final = inductive_midpoint_mean(m, p, q, iterations=opts.iters, callback=lambda i, a, b: history.append((i, a, b)))
    result = DemoResult("ahm")

    scene = Scene(m, LAMBDA, (0, 1), title="Inductive arithmetic-harmonic mean", axis_labels=("a11", "a12"))
    rows = []
    for i, a, b in history:
        ma, mb = m.matrix(a), m.matrix(b)
        err = float(np.linalg.norm(ma - oracle))
        rows.append([i, ma[0, 0], ma[0, 1], ma[1, 1], mb[0, 0], mb[0, 1], mb[1, 1], err])
        if i > 0:
            result.add(f"error_{i}", err)
        if i < len(history) - 1:
            first = i == 0
            scene.add_curve(BregmanGeodesic(m, a, b, PRIMAL), color="red", opacity=1.0 if first else 0.3,
                            label="primal geodesic" if first else None, kind="geodesic")
            scene.add_curve(BregmanGeodesic(m, a, b, DUAL), color="blue", opacity=1.0 if first else 0.3,
                            label="dual geodesic" if first else None, kind="geodesic")
        scene.add_point(a, color="red", opacity=1.0 if i == 0 else 0.5)
        scene.add_point(b, color="blue", opacity=1.0 if i == 0 else 0.5)
    scene.add_point(final, color="purple", label=f"AHM after {opts.iters} iterations")
    scene.add_point(m.point(oracle), color="green", opacity=0.6, label="geometric mean")

    final_m = m.matrix(final)
    result.add("final_11", final_m[0, 0])
    result.add("final_12", final_m[0, 1])
    result.add("final_22", final_m[1, 1])
    result.add("oracle_11", oracle[0, 0])
    result.add("oracle_12", oracle[0, 1])
    result.add("oracle_22", oracle[1, 1])
    result.add("residual_frobenius", np.linalg.norm(final_m - oracle))

    header = ["iteration", "p11", "p12", "p22", "q11", "q12", "q22", "error_frobenius"]
    result.files.append(write_csv(out / "ahm.csv", header, rows))
    _write_figures(scene, out, "ahm", result, opts.png)
    return result


def _load_histograms(opts: DemoOptions):
    if (opts.left is None) != (opts.right is None):
        raise ArgumentError("give both --left and --right histogram files, or neither")
    if opts.left is None:
        return synthetic_histograms()
    h1, h2 = ingest_histogram(opts.left), ingest_histogram(opts.right)
    if h1.shape != h2.shape:
        raise InputError(f"histograms have different lengths ({h1.shape[0]} and {h2.shape[0]})")
    if h1.shape[0] < 2:
        raise InputError("histograms need at least two bins")
    return h1, h2


def demo_histogram_centroids(out: Path, opts: DemoOptions) -> DemoResult:
    h1, h2 = _load_histograms(opts)
    k = h1.shape[0]
    cat = CategoricalManifold(k)
    mix = cat.to_discrete_mixture_manifold()
    pts = [cat.point_to_mixture_point(Point(LAMBDA, h)) for h in (h1, h2)]
    result = DemoResult("histogram-centroids")

    counts = {}

    def counter(key):
        def cb(it, x):
            counts[key] = it
        return cb

    js = skew_burbea_rao_barycenter(mix, pts, alpha=opts.alpha, dc=PRIMAL, callback=counter("js"))
    jef = skew_burbea_rao_barycenter(mix, pts, alpha=opts.alpha, dc=DUAL, callback=counter("jef"))
    js_hist = cat.coords(mix.point_to_categorical_point(js), LAMBDA)
    jef_hist = cat.coords(mix.point_to_categorical_point(jef), LAMBDA)

    result.add("js_divergence", skew_jensen_divergence(mix, pts[0], pts[1], 0.0, PRIMAL, scaled=False))
    result.add("jeffreys_divergence", float(np.sum((h1 - h2) * np.log(h1 / h2))))
    result.add("js_objective", skew_burbea_rao_objective(mix, mix.coords(js, PRIMAL.tag), pts, alpha=opts.alpha, dc=PRIMAL))
    result.add("dual_objective", skew_burbea_rao_objective(mix, mix.coords(jef, DUAL.tag), pts, alpha=opts.alpha, dc=DUAL))
    result.add("js_iterations", counts.get("js", 0))
    result.add("dual_iterations", counts.get("jef", 0))

    rows = [[i, h1[i], h2[i], js_hist[i], jef_hist[i]] for i in range(k)]
    header = ["bin", "histogram_1", "histogram_2", "js_centroid", "jeffreys_centroid"]
    result.files.append(write_csv(out / "histogram-centroids.csv", header, rows))

    bins = np.arange(k, dtype=float)
    scene = Scene(None, title="Histogram centroids", axis_labels=("intensity", "density"))
    for series, color, label in ((h1, "red", "histogram 1"), (h2, "blue", "histogram 2"),
                                 (js_hist, "black", "Jensen-Shannon centroid"), (jef_hist, "grey", "Jeffreys centroid")):
        scene.add_polyline(np.stack([bins, series], axis=1), color=color, label=label)
    _write_figures(scene, out, "histogram-centroids", result, opts.png)
    return result


def demo_chernoff(out: Path, opts: DemoOptions) -> DemoResult:
    g = GaussianManifold(1)
    p, q = (Point(LAMBDA, v) for v in CHERNOFF_INPUTS)
    alpha = chernoff_point(g, p, q)
    primal = BregmanGeodesic(g, p, q, PRIMAL)
    dual = BregmanGeodesic(g, p, q, DUAL)
    cp = primal(1.0 - alpha)
    bis = BregmanBisector(g, p, q, DUAL)
    result = DemoResult("chernoff")

    result.add("alpha_star", alpha)
    result.add("chernoff_information", chernoff_information(g, p, q))
    result.add("equidistance_residual", equidistance_residual(g, p, q, alpha))
    result.add("divergence_to_p", bregman_divergence(g, p, cp, PRIMAL))
    result.add("divergence_to_q", bregman_divergence(g, q, cp, PRIMAL))
    result.add("bisector_residual", bis.residual(cp))
    result.add("kl_p_q", gaussian_kl(g, p, q))
    result.add("kl_q_p", gaussian_kl(g, q, p))
    result.add("bhattacharyya_distance", bhattacharyya_distance(g, p, q))

    scene = Scene(g, ETA, (0, 1), title="Chernoff point of two univariate normals", axis_labels=("eta1", "eta2"))
    scene.add_curve(primal, color="red", label="primal geodesic", kind="geodesic")
    scene.add_curve(dual, color="blue", label="dual geodesic", kind="geodesic")
    # bisector segment spanning the geodesics along its swept axis
    axis = bis.sweep_axis((0, 1))
    span = [g.coords(x, ETA)[axis] for x in (*primal.sample(), *dual.sample())]
    pad = 0.1 * (max(span) - min(span))
    scene.add_polyline(bis.sample_line((0, 1), min(span) - pad, max(span) + pad), color="blue", opacity=0.7,
                       label="dual bisector", kind="bisector")
    for pt, color, label in ((p, "black", "N(0, 1)"), (q, "black", "N(1, 1.5)"),
                             (cp, "purple", f"Chernoff point, alpha={alpha:.2f}")):
        scene.add_point(pt, color=color, label=label)
        scene.add_tissot(pt, scale=CHERNOFF_TISSOT_SCALE, color="grey", opacity=0.6)

    rows = [[k, v] for k, v in result.scalars]
    result.files.append(write_csv(out / "chernoff.csv", ["quantity", "value"], rows))
    _write_figures(scene, out, "chernoff", result, opts.png)
    return result


DEMOS = {
    "centroids": demo_centroids,
    "ahm": demo_ahm,
    "histogram-centroids": demo_histogram_centroids,
    "chernoff": demo_chernoff,
}


def run_demo(name: str, out_dir=".", options: DemoOptions | None = None) -> DemoResult:
    if name not in DEMOS:
        raise ArgumentError(f"unknown demo {name!r}; choose from {', '.join(DEMOS)}")
    opts = options or DemoOptions()
    if int(opts.iters) < 1:
        raise ArgumentError("--iters must be a positive integer")
    if not 0.0 < opts.alpha < 1.0 or not math.isfinite(opts.alpha):
        raise ArgumentError("--alpha must lie in (0, 1)")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return DEMOS[name](out, opts)
