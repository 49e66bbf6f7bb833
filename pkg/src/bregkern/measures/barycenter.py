"""Barycenters: sided Bregman centroids and skew Burbea-Rao centroids."""

from __future__ import annotations

import numpy as np

from bregkern.core.coords import DualCoordinate, Point
from bregkern.core.manifold import BregmanManifold
from bregkern.errors import ArgumentError, ConvergenceError

CCCP_TOL = 1e-10
CCCP_MAX_ITER = 1000


def normalized_weights(points, weights=None) -> np.ndarray:
    if len(points) == 0:
        raise ArgumentError("barycenter of an empty point set")
    if weights is None:
        weights = np.ones(len(points))
    w = np.asarray(weights, dtype=float).reshape(-1)
    if w.shape[0] != len(points):
        raise ArgumentError("need one weight per point")
    if np.any(w < 0) or not np.all(np.isfinite(w)):
        raise ArgumentError("weights must be finite and non-negative")
    total = np.sum(w)
    if not total > 0:
        raise ArgumentError("total weight is zero")
    return w / total


def _stack(m, points, tag):
    return [m.coords(p, tag) for p in points]


def _weighted_sum(w, xs):
    # fixed list order keeps results bit-reproducible
    acc = np.zeros_like(xs[0])
    for wi, xi in zip(w, xs):
        acc = acc + wi * xi
    return acc


def dual_barycenter(m: BregmanManifold, points, weights=None, dc=DualCoordinate.PRIMAL) -> Point:
    """Weighted arithmetic mean in the ``dc`` coordinate.

    PRIMAL minimises ``sum w_i B_F(theta_i : theta)``; DUAL minimises
    ``sum w_i B_F(theta : theta_i)``.
    """
    dc = DualCoordinate.parse(dc)
    w = normalized_weights(points, weights)
    return Point(dc.tag, _weighted_sum(w, _stack(m, points, dc.tag)))


def _gradient_maps(m, dc):
    if dc is DualCoordinate.PRIMAL:
        return m.theta_to_eta, m.eta_to_theta
    return m.eta_to_theta, m.theta_to_eta


def skew_burbea_rao_objective(m: BregmanManifold, x, points, weights=None, alpha=0.5, dc=DualCoordinate.PRIMAL) -> float:
    """``sum w_i [a G(x) + (1-a) G(x_i) - G(a x + (1-a) x_i)]`` with G chosen by ``dc``."""
    dc = DualCoordinate.parse(dc)
    w = normalized_weights(points, weights)
    x = m.coords(x, dc.tag) if isinstance(x, Point) else np.asarray(x, dtype=float)
    g = m.potential
    gx = g(dc, x)
    total = 0.0
    for wi, xi in zip(w, _stack(m, points, dc.tag)):
        total += wi * (alpha * gx + (1.0 - alpha) * g(dc, xi) - g(dc, alpha * x + (1.0 - alpha) * xi))
    return float(total)


def skew_burbea_rao_barycenter(
    m: BregmanManifold,
    points,
    weights=None,
    alpha: float = 0.5,
    dc=DualCoordinate.PRIMAL,
    tol: float = CCCP_TOL,
    max_iter: int = CCCP_MAX_ITER,
    callback=None,
) -> Point:
    """Minimiser of :func:`skew_burbea_rao_objective` by the concave-convex procedure.

    Iterates ``x <- (grad G)^-1(sum w_i grad G(a x + (1-a) x_i))`` from the
    arithmetic mean until the sup-norm change drops below ``tol``.
    ``callback(iteration, x)`` is called after every update.

    With the discrete mixture manifold, PRIMAL and ``alpha = 0.5`` this is the
    Jensen-Shannon centroid.
    """
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise ArgumentError("alpha must lie in (0, 1)")
    dc = DualCoordinate.parse(dc)
    w = normalized_weights(points, weights)
    xs = _stack(m, points, dc.tag)
    grad, grad_inv = _gradient_maps(m, dc)
    x = _weighted_sum(w, xs)
    for it in range(1, max_iter + 1):
        target = _weighted_sum(w, [grad(alpha * x + (1.0 - alpha) * xi) for xi in xs])
        x_new = grad_inv(target)
        change = float(np.max(np.abs(x_new - x)))
        x = x_new
        if callback is not None:
            callback(it, x.copy())
        if change < tol:
            return Point(dc.tag, x)
    raise ConvergenceError("skew Burbea-Rao barycenter", max_iter, last=Point(dc.tag, x))


class Barycenter:
    """Callable ``(list[Point], list[float] | None) -> Point`` bound to a manifold."""

    def __init__(self, manifold: BregmanManifold, dcoords=DualCoordinate.PRIMAL):
        self.manifold = manifold
        self.dcoords = DualCoordinate.parse(dcoords)

    def __call__(self, points, weights=None) -> Point:
        raise NotImplementedError


class DualBarycenter(Barycenter):
    def __call__(self, points, weights=None):
        return dual_barycenter(self.manifold, points, weights, self.dcoords)


class SkewBurbeaRaoBarycenter(Barycenter):
    def __init__(self, manifold, dcoords=DualCoordinate.PRIMAL, alpha=0.5):
        super().__init__(manifold, dcoords)
        self.alpha = alpha

    def __call__(self, points, weights=None):
        return skew_burbea_rao_barycenter(self.manifold, points, weights, self.alpha, self.dcoords)
