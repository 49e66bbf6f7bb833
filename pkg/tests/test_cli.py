import io
import re
import subprocess
import sys
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from bregkern.cli.demos import AHM_INPUTS, DemoOptions, run_demo
from bregkern.cli.io import ingest_histogram, ingest_points, pgm_histogram, read_pgm
from bregkern.cli.main import main
from bregkern.core import ETA, LAMBDA, THETA, Point
from bregkern.errors import ArgumentError, ConvergenceError, InputError
from bregkern.manifolds import CategoricalManifold, DiscreteMixtureManifold, GaussianManifold, gaussian_kl
from bregkern.measures import skew_burbea_rao_objective
from bregkern.report import read_csv

import oracles

SVG = "{http://www.w3.org/2000/svg}"
DEMO_NAMES = ["centroids", "ahm", "histogram-centroids", "chernoff"]


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def scalars(text):
    return {k: float(v) for k, v in re.findall(r"^\s+(\w+) = (\S+)$", text, re.M)}


# -- ingestion -----------------------------------------------------------------------------

def test_ingest_single_gaussian_record(tmp_path):
    f = tmp_path / "p.txt"
    f.write_text("lambda;0,1\n")
    (p,) = ingest_points(f, manifold=GaussianManifold(1))
    assert p == Point(LAMBDA, [0.0, 1.0])


def test_ingest_points_formats(tmp_path):
    f = tmp_path / "p.txt"
    f.write_text("# header\n\neta;0.5, 1.25\n0.1,2  # trailing comment\n")
    pts = ingest_points(f, "lambda")
    assert pts[0] == Point(ETA, [0.5, 1.25])
    assert pts[1] == Point(LAMBDA, [0.1, 2.0])


@pytest.mark.parametrize(
    "body, line",
    [("lambda;0,1\nlambda;0,x\n", 2), ("\n\nomega;1,2\n", 3), ("1,2\n", 1), ("lambda;0,-1\n", 1), ("lambda;0,1,2\n", 1)],
)
def test_ingest_points_errors_carry_line_numbers(tmp_path, body, line):
    f = tmp_path / "bad.txt"
    f.write_text(body)
    with pytest.raises(InputError) as err:
        ingest_points(f, manifold=GaussianManifold(1))
    assert err.value.line == line
    assert f"bad.txt:{line}:" in str(err.value)


def test_ingest_histogram_examples(tmp_path):
    f = tmp_path / "h.txt"
    f.write_text("1\n1\n2\n")
    np.testing.assert_allclose(ingest_histogram(f), [0.25, 0.25, 0.5], atol=1e-7)
    f.write_text("7\n" * 256)
    h = ingest_histogram(f)
    assert h.shape == (256,)
    np.testing.assert_allclose(h, np.full(256, 1 / 256), rtol=1e-14)
    f.write_text("1\n-2\n3\n")
    with pytest.raises(InputError) as err:
        ingest_histogram(f)
    assert err.value.line == 2
    with pytest.raises(FileNotFoundError, match="missing.txt"):
        ingest_histogram(tmp_path / "missing.txt")


def _write_pgm(path, pixels, comment=b"# made by a test\n"):
    h, w = pixels.shape
    path.write_bytes(b"P5\n" + comment + f"{w} {h}\n255\n".encode() + pixels.astype(np.uint8).tobytes())


def test_pgm_round_trip(tmp_path, rng):
    pixels = rng.integers(0, 256, size=(7, 11))
    f = tmp_path / "img.pgm"
    _write_pgm(f, pixels)
    np.testing.assert_array_equal(read_pgm(f), pixels)
    counts = pgm_histogram(f)
    np.testing.assert_array_equal(counts, np.bincount(pixels.ravel(), minlength=256))
    f.write_bytes(b"P2\n1 1\n255\n0\n")
    with pytest.raises(InputError):
        read_pgm(f)


def test_hist_from_pgm_command(tmp_path):
    pixels = np.array([[0, 0, 255], [3, 3, 3]])
    f = tmp_path / "img.pgm"
    _write_pgm(f, pixels, b"")
    code, text = run(["hist-from-pgm", str(f)])
    assert code == 0
    values = [int(v) for v in text.split()]
    assert len(values) == 256 and values[0] == 2 and values[3] == 3 and values[255] == 1
    out = tmp_path / "h.txt"
    assert run(["hist-from-pgm", str(f), "--out", str(out)])[0] == 0
    assert ingest_histogram(out)[3] == pytest.approx(0.5, abs=1e-6)


# -- div and export -------------------------------------------------------------------------------

def _pair_files(tmp_path):
    left, right = tmp_path / "l.txt", tmp_path / "r.txt"
    left.write_text("0,1\n0.5,2\n")
    right.write_text("1,1\n-1,0.5\n")
    return left, right


def test_div_matches_gaussian_kl(tmp_path):
    left, right = _pair_files(tmp_path)
    code, text = run(["div", "--manifold", "gaussian:1", "--left", str(left), "--right", str(right),
                      "--dcoords", "eta"])
    assert code == 0
    rows = text.strip().splitlines()
    assert rows[0] == "index,value"
    g = GaussianManifold(1)
    for row, (a, b) in zip(rows[1:], [((0, 1), (1, 1)), ((0.5, 2), (-1, 0.5))]):
        expect = oracles.gaussian_kl(np.array([a[0]]), np.array([[a[1]]]), np.array([b[0]]), np.array([[b[1]]]))
        assert float(row.split(",")[1]) == pytest.approx(expect, rel=1e-10)
        assert expect == pytest.approx(gaussian_kl(g, Point(LAMBDA, a), Point(LAMBDA, b)), rel=1e-10)


@pytest.mark.parametrize("kind", ["bregman", "fy", "jensen", "chernoff"])
def test_div_kinds_run(tmp_path, kind):
    left, right = _pair_files(tmp_path)
    code, text = run(["div", "--manifold", "gaussian:1", "--left", str(left), "--right", str(right), "--kind", kind])
    assert code == 0
    assert all(float(r.split(",")[1]) >= 0 for r in text.strip().splitlines()[1:])


def test_exit_codes(tmp_path, monkeypatch):
    left, right = _pair_files(tmp_path)
    short = tmp_path / "s.txt"
    short.write_text("0,1\n")
    base = ["div", "--manifold", "gaussian:1", "--left", str(left)]
    assert run(base + ["--right", str(short)])[0] == 1
    assert run(base + ["--right", str(tmp_path / "missing.txt")])[0] == 1
    assert run(["div", "--manifold", "nope:3", "--left", str(left), "--right", str(right)])[0] == 1
    with pytest.raises(SystemExit) as exc:
        run(["div", "--manifold", "gaussian:1"])
    assert exc.value.code == 1
    assert run(["demo", "ahm", "--out", str(tmp_path), "--iters", "0"])[0] == 1

    def fail(*args):
        raise ConvergenceError("forced", 7)

    monkeypatch.setattr(sys.modules["bregkern.cli.main"], "chernoff_information", fail)
    assert run(base + ["--right", str(right), "--kind", "chernoff"])[0] == 2


def test_export_command(tmp_path):
    pts = tmp_path / "pts.txt"
    pts.write_text("theta;1,1\ntheta;2,0.5\ntheta;0.5,1.5\n")
    svg, png = tmp_path / "e.svg", tmp_path / "e.png"
    code, _ = run(["export", "--manifold", "ekl2d", "--points", str(pts), "--coords", "theta", "--display", "theta",
                   "--geodesics", "both", "--bisector", "primal", "--ball", "0.2", "--tissot", "0.1",
                   "--out", str(svg), "--png", str(png)])
    assert code == 0
    root = ET.parse(svg).getroot()
    kinds = [e.get("class") for e in root.iter(f"{SVG}polyline")]
    assert kinds.count("geodesic") == 4
    assert kinds.count("bisector") == 1
    assert kinds.count("ball") == 3
    assert len(root.findall(f".//{SVG}polygon")) == 3
    assert len(root.findall(f".//{SVG}circle")) == 3
    assert png.read_bytes()[:4] == b"\x89PNG"
    code, _ = run(["export", "--manifold", "gaussian:1", "--points", str(pts), "--coords", "theta",
                   "--ball", "0.2", "--out", str(svg)])
    assert code == 1


def test_export_categorical_in_lambda_with_tissot(tmp_path):
    pts = tmp_path / "pts.txt"
    pts.write_text("0.2,0.3,0.5\n0.6,0.1,0.3\n")
    svg = tmp_path / "c.svg"
    code, _ = run(["export", "--manifold", "categorical:3", "--points", str(pts), "--geodesics", "dual",
                   "--bisector", "dual", "--tissot", "0.05", "--out", str(svg)])
    assert code == 0


# -- demos ---------------------------------------------------------------------------------------

def test_chernoff_demo(tmp_path):
    code, text = run(["demo", "chernoff", "--out", str(tmp_path), "--no-png"])
    assert code == 0
    vals = scalars(text)
    a_grid, gap = oracles.chernoff_grid(0.0, 1.0, 1.0, 1.5)
    assert abs(vals["alpha_star"] - a_grid) < 1e-3
    assert vals["chernoff_information"] == pytest.approx(gap, rel=1e-5)
    root = ET.parse(tmp_path / "chernoff.svg").getroot()
    kinds = [e.get("class") for e in root.iter(f"{SVG}polyline")]
    assert len(kinds) == 3
    assert kinds.count("bisector") == 1
    header, rows = read_csv(tmp_path / "chernoff.csv")
    assert header == ["quantity", "value"]
    table = {k: float(v) for k, v in rows}
    assert abs(table["equidistance_residual"]) < 1e-10


def test_ahm_demo(tmp_path):
    code, text = run(["demo", "ahm", "--out", str(tmp_path), "--no-png"])
    assert code == 0
    vals = scalars(text)
    a, b = (np.array([[x[0], x[1]], [x[1], x[2]]]) for x in AHM_INPUTS)
    target = oracles.geometric_mean(a, b)
    final = np.array([[vals["final_11"], vals["final_12"]], [vals["final_12"], vals["final_22"]]])
    assert np.linalg.norm(final - target) < 1e-5
    assert vals["residual_frobenius"] < 1e-6
    _, rows = read_csv(tmp_path / "ahm.csv")
    assert len(rows) == 6
    errors = [float(r[-1]) for r in rows]
    assert all(e1 < e0 for e0, e1 in zip(errors, errors[1:]))


def test_centroids_demo_optimality(tmp_path):
    result = run_demo("centroids", tmp_path, DemoOptions(png=False))
    vals = dict(result.scalars)
    # each sided KL centroid minimises its own sided objective among the drawn centroids
    names = ["left_kl", "right_kl", "bhattacharyya", "fisher_rao"]
    assert min(names, key=lambda n: vals[f"{n}_kl_sum_to"]) == "left_kl"
    assert min(names, key=lambda n: vals[f"{n}_kl_sum_from"]) == "right_kl"
    header, rows = read_csv(tmp_path / "centroids.csv")
    assert header == ["name", "mu1", "mu2", "sigma11", "sigma12", "sigma22"]
    assert [r[0] for r in rows[2:]] == names


def test_histogram_demo_identical_inputs(tmp_path):
    h = tmp_path / "h.txt"
    h.write_text("".join(f"{(i % 17) + 1}\n" for i in range(256)))
    run_demo("histogram-centroids", tmp_path, DemoOptions(left=str(h), right=str(h), png=False))
    _, rows = read_csv(tmp_path / "histogram-centroids.csv")
    data = np.array([[float(v) for v in r] for r in rows])
    np.testing.assert_allclose(data[:, 3], data[:, 1], atol=1e-9)
    np.testing.assert_allclose(data[:, 4], data[:, 1], atol=1e-9)


def test_histogram_demo_default_centroid_is_stationary(tmp_path):
    run_demo("histogram-centroids", tmp_path, DemoOptions(png=False))
    _, rows = read_csv(tmp_path / "histogram-centroids.csv")
    data = np.array([[float(v) for v in r] for r in rows])
    mix = DiscreteMixtureManifold(256)
    # mixture theta is the histogram without its last bin
    pts = [Point(THETA, data[:-1, 1]), Point(THETA, data[:-1, 2])]
    x = data[:-1, 3]
    f0 = skew_burbea_rao_objective(mix, x, pts)
    rng = np.random.default_rng(1)
    for _ in range(10):
        d = 1e-3 * x * rng.normal(size=x.shape)
        d -= x * d.sum() / x.sum()
        assert skew_burbea_rao_objective(mix, x + d, pts) >= f0 - 1e-15


def test_demo_argument_errors(tmp_path):
    with pytest.raises(ArgumentError):
        run_demo("nope", tmp_path)
    with pytest.raises(ArgumentError):
        run_demo("histogram-centroids", tmp_path, DemoOptions(alpha=1.0))
    with pytest.raises(ArgumentError):
        run_demo("histogram-centroids", tmp_path, DemoOptions(left="a.txt"))


@pytest.mark.parametrize("name", DEMO_NAMES)
def test_demo_outputs_are_byte_identical(tmp_path, name):
    a, b = tmp_path / "a", tmp_path / "b"
    ra = run_demo(name, a)
    rb = run_demo(name, b)
    assert ra.summary().replace(str(a), "") == rb.summary().replace(str(b), "")
    files = sorted(p.name for p in a.iterdir())
    assert files == sorted(p.name for p in b.iterdir())
    assert {f.rsplit(".", 1)[1] for f in files} == {"csv", "svg", "png"}
    for f in files:
        assert (a / f).read_bytes() == (b / f).read_bytes(), f


def test_console_script_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "bregkern.cli.main", "demo", "chernoff", "--out", str(tmp_path),
                           "--no-png"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "alpha_star = 0.451" in proc.stdout


def test_categorical_cli_manifold_matches_direct_kl(tmp_path):
    left, right = tmp_path / "l.txt", tmp_path / "r.txt"
    left.write_text("0.2,0.3,0.5\n")
    right.write_text("0.6,0.1,0.3\n")
    code, text = run(["div", "--manifold", "categorical:3", "--left", str(left), "--right", str(right),
                      "--dcoords", "eta"])
    assert code == 0
    value = float(text.splitlines()[1].split(",")[1])
    assert value == pytest.approx(oracles.kl_discrete([0.2, 0.3, 0.5], [0.6, 0.1, 0.3]), rel=1e-12)
    assert CategoricalManifold(3).k == 3
