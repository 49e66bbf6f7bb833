import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import lambertw as scipy_lambertw

from bregkern.core import ETA, LAMBDA, THETA, DualCoordinate, Point, metric_tensor
from bregkern.errors import ArgumentError, DegenerateError, DomainError
from bregkern.geometry import (
    BregmanBall,
    BregmanBisector,
    BregmanGeodesic,
    EKL2DBregmanBall,
    bisector,
    dual_parallel_transport,
    ekl_ball_curve,
    geodesic,
    lambert_w,
    mixed_inner_product,
)
from bregkern.manifolds import CategoricalManifold, EKL2DManifold, EuclideanManifold, GaussianManifold
from bregkern.measures import bregman_divergence, chernoff_point

import oracles
from sampling import sampler, six_manifolds

PRIMAL, DUAL = DualCoordinate.PRIMAL, DualCoordinate.DUAL


# -- geodesics -------------------------------------------------------------

@pytest.mark.parametrize("name", list(six_manifolds()))
@pytest.mark.parametrize("dc", [PRIMAL, DUAL])
def test_geodesic_endpoints_and_affinity(name, dc, rng):
    m = six_manifolds()[name]
    draw = sampler(m)
    for _ in range(10):
        p, q = draw(rng), draw(rng)
        geo = geodesic(m, p, q, dc)
        src, dst = m.coords(p, dc.tag), m.coords(q, dc.tag)
        np.testing.assert_allclose(geo(0.0).data, src, atol=1e-12, rtol=0)
        np.testing.assert_allclose(geo(1.0).data, dst, atol=1e-12, rtol=0)
        for t in (0.1, 0.5, 0.77):
            assert np.array_equal(geo(t).data, (1 - t) * src + t * dst)
            assert geo(t).coords == dc.tag


def test_geodesic_degenerate_and_parameter_range():
    m = EuclideanManifold(2)
    p = Point(THETA, [1.0, 2.0])
    geo = BregmanGeodesic(m, p, p)
    for t in np.linspace(0, 1, 5):
        np.testing.assert_array_equal(geo(t).data, p.data)
    with pytest.raises(ArgumentError):
        geo(1.5)
    assert len(geo.sample(256)) == 257


# -- bisectors --------------------------------------------------------------

def test_euclidean_bisector_is_vertical_line():
    m = EuclideanManifold(2)
    bis = bisector(m, Point(THETA, [0.0, 0.0]), Point(THETA, [2.0, 0.0]))
    for y in (-3.0, 0.0, 5.0):
        assert bis.contains(Point(THETA, [1.0, y]))
    assert not bis.contains(Point(THETA, [1.1, 0.0]))
    for x in bis.sample_line((0, 1), -1, 1, n=10):
        assert x.data[0] == pytest.approx(1.0)


def test_bisector_of_identical_points_is_degenerate():
    m = EuclideanManifold(2)
    p = Point(THETA, [1.0, 1.0])
    with pytest.raises(DegenerateError):
        BregmanBisector(m, p, p)


def _on_bisector_points(m, bis, p, q, rng, count=50, spread=0.3):
    tag = bis.dcoords.tag
    mid = 0.5 * (m.coords(p, tag) + m.coords(q, tag))
    out = []
    while len(out) < count:
        x = bis.project(Point(tag, mid + spread * rng.normal(size=mid.shape)))
        try:
            m.coords(x, THETA), m.coords(x, ETA)
        except DomainError:
            continue
        out.append(x)
    return out


@pytest.mark.parametrize("name", ["categorical", "gaussian", "ekl2d", "psd"])
def test_bisector_equidistance(name, rng):
    m = six_manifolds()[name]
    draw = sampler(m)
    p, q = draw(rng), draw(rng)
    prim = BregmanBisector(m, p, q, PRIMAL)
    for x in _on_bisector_points(m, prim, p, q, rng, spread=0.05):
        assert prim.contains(x)
        assert abs(bregman_divergence(m, x, p) - bregman_divergence(m, x, q)) < 1e-8
    dual = BregmanBisector(m, p, q, DUAL)
    for x in _on_bisector_points(m, dual, p, q, rng, spread=0.05):
        assert dual.contains(x)
        assert abs(bregman_divergence(m, p, x) - bregman_divergence(m, q, x)) < 1e-8


def test_dual_bisector_contains_chernoff_point():
    g = GaussianManifold(1)
    p, q = Point(LAMBDA, [0.0, 1.0]), Point(LAMBDA, [1.0, 1.5])
    alpha = chernoff_point(g, p, q)
    cp = BregmanGeodesic(g, p, q, PRIMAL)(1 - alpha)
    assert abs(BregmanBisector(g, p, q, DUAL).residual(cp)) < 1e-8


# -- balls and the extended-KL sphere -----------------------------------------------

def test_ball_membership():
    m = EuclideanManifold(2)
    c = Point(THETA, [0.0, 0.0])
    assert BregmanBall(m, c, 1.0).is_in(c)
    ball = BregmanBall(m, c, 0.5)
    assert ball.is_in(Point(THETA, [0.6, 0.7]))
    assert not ball.is_in(Point(THETA, [0.8, 0.7]))
    # boundary is outside
    assert not ball.is_in(Point(THETA, [1.0, 0.0]))
    with pytest.raises(ArgumentError):
        BregmanBall(m, c, -1.0)


def test_ball_orientation_is_center_first():
    m = EKL2DManifold()
    c, x = Point(THETA, [1.0, 1.0]), Point(THETA, [2.0, 0.5])
    ball = BregmanBall(m, c, 1.0)
    assert ball.divergence_from_center(x) == pytest.approx(bregman_divergence(m, c, x))


def test_ekl_curve_first_sample_example():
    c = Point(THETA, [1.0, 1.0])
    x = ekl_ball_curve(c, 0.1)(0.0)
    assert x.data[1] == pytest.approx(1.0, abs=1e-12)
    # x1 solves x log x - x + 1 = 0.1 with the center-first orientation: 1 * log(1/x) - 1 + x = 0.1
    assert x.data[0] == pytest.approx(oracles.ekl_root(1.0, 0.1, above=True), abs=1e-12)


def test_ekl_root_against_bisection_both_sides():
    from bregkern.geometry.ball import _coordinate_root

    for c in (0.3, 1.0, 2.5):
        for rho in (1e-6, 0.1, 3.0):
            assert _coordinate_root(c, rho, 0) == pytest.approx(oracles.ekl_root(c, rho, above=False), rel=1e-12)
            assert _coordinate_root(c, rho, -1) == pytest.approx(oracles.ekl_root(c, rho, above=True), rel=1e-12)


@settings(max_examples=30, deadline=None)
@given(st.floats(0.1, 5.0), st.floats(0.1, 5.0), st.floats(1e-3, 3.0))
def test_ekl_curve_lies_on_sphere(c1, c2, r):
    m = EKL2DManifold()
    ball = EKL2DBregmanBall(m, Point(THETA, [c1, c2]), r)
    for x in ball.parametrized_curve().sample(64):
        assert ball.divergence_from_center(x) == pytest.approx(r, abs=1e-8 * max(1.0, r))


def test_ekl_curve_is_closed_and_shrinks_to_center():
    c = Point(THETA, [1.5, 0.7])
    curve = ekl_ball_curve(c, 0.4)
    np.testing.assert_allclose(curve(0.0).data, curve(1.0).data, atol=1e-12)
    tiny = ekl_ball_curve(c, 1e-12)
    for x in tiny.sample(32):
        np.testing.assert_allclose(x.data, c.data, atol=1e-5)


def test_ekl_curve_coordinate_swap_symmetry():
    a = ekl_ball_curve(Point(THETA, [1.5, 0.7]), 0.4).sample(64)
    b = ekl_ball_curve(Point(THETA, [0.7, 1.5]), 0.4).sample(64)
    swapped = {tuple(np.round(x.data[::-1], 9)) for x in a}
    assert swapped == {tuple(np.round(x.data, 9)) for x in b}


def test_ekl_curve_argument_errors():
    with pytest.raises(ArgumentError):
        ekl_ball_curve(Point(THETA, [1.0, 1.0]), 0.0)
    with pytest.raises(DomainError):
        ekl_ball_curve(Point(THETA, [1.0, -1.0]), 0.1)


# -- Lambert W -------------------------------------------------------------------

def test_lambert_w_examples():
    assert lambert_w(0, 0.0) == 0.0
    assert lambert_w(0, math.e) == pytest.approx(1.0, abs=1e-15)
    assert lambert_w(-1, -1 / math.e) == pytest.approx(-1.0, abs=1e-7)
    with pytest.raises(DomainError):
        lambert_w(0, -0.5)
    with pytest.raises(DomainError):
        lambert_w(-1, 0.5)
    with pytest.raises(ArgumentError):
        lambert_w(1, 0.5)


def test_lambert_w_matches_scipy():
    for x in np.linspace(-1 / math.e + 1e-6, 50, 400):
        assert lambert_w(0, x) == pytest.approx(scipy_lambertw(x, 0).real, rel=1e-12, abs=1e-13)
    for x in np.linspace(-1 / math.e + 1e-6, -1e-12, 400):
        assert lambert_w(-1, x) == pytest.approx(scipy_lambertw(x, -1).real, rel=1e-12)


def test_lambert_w_near_branch_point():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 40
    for d in np.logspace(-16, -1, 200):
        x = -1 / math.e + d
        for b in (0, -1):
            exact = float(mpmath.lambertw(mpmath.mpf(x), b).real)
            assert lambert_w(b, x) == pytest.approx(exact, rel=1e-13)


# -- parallel transport -------------------------------------------------------------

def test_transport_is_identity_on_components(rng):
    m = CategoricalManifold(3)
    p, q = Point(LAMBDA, [0.2, 0.3, 0.5]), Point(LAMBDA, [0.6, 0.1, 0.3])
    v = rng.normal(size=2)
    for dc in (PRIMAL, DUAL):
        np.testing.assert_array_equal(dual_parallel_transport(m, v, p, p, dc), v)
        there = dual_parallel_transport(m, v, p, q, dc)
        np.testing.assert_array_equal(dual_parallel_transport(m, there, q, p, dc), v)


@pytest.mark.parametrize("name", list(six_manifolds()))
def test_transport_metric_compatibility(name, rng):
    m = six_manifolds()[name]
    draw = sampler(m)
    for _ in range(10):
        a, b = draw(rng), draw(rng)
        v, w = rng.normal(size=m.dimension), rng.normal(size=m.dimension)
        pv = dual_parallel_transport(m, v, a, b, PRIMAL)
        pw = dual_parallel_transport(m, w, a, b, DUAL)
        before = mixed_inner_product(m, a, v, w)
        after = mixed_inner_product(m, b, pv, pw)
        assert after == pytest.approx(before, rel=1e-8, abs=1e-8)
        # the mixed pairing is the Euclidean pairing of the components
        assert before == pytest.approx(float(v @ w), rel=1e-7, abs=1e-8)
        # with theta components on both sides the metric is not preserved in general
        g_a, g_b = metric_tensor(m, a, PRIMAL), metric_tensor(m, b, PRIMAL)
        assert np.isfinite(v @ g_a @ v) and np.isfinite(v @ g_b @ v)


def test_transport_rejects_wrong_length():
    m = EuclideanManifold(2)
    p = Point(THETA, [0.0, 0.0])
    with pytest.raises(DomainError):
        dual_parallel_transport(m, [1.0, 2.0, 3.0], p, p)
