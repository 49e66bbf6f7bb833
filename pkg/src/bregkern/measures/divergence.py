"""Divergences on Bregman manifolds.

Conventions follow ``B_F(x1 : x2) = F(x1) - F(x2) - <x1 - x2, grad F(x2)>``.
The skew Jensen family uses ``alpha`` in [-1, 1] with mixing point
``(1 + alpha)/2 * x1 + (1 - alpha)/2 * x2``. Its scaled form is continuous
on [-1, 1]: it tends to ``B_F(x1 : x2)`` as alpha -> -1 (the mix approaches x2)
and to ``B_F(x2 : x1)`` as alpha -> 1.
"""

from __future__ import annotations

import numpy as np

from bregkern.core.coords import DualCoordinate, Point
from bregkern.core.manifold import BregmanManifold
from bregkern.errors import ArgumentError


def _bregman(m: BregmanManifold, dc: DualCoordinate, x1, x2) -> float:
    return float(m.potential(dc, x1) - m.potential(dc, x2) - np.dot(x1 - x2, m.potential_gradient(dc, x2)))


def bregman_divergence(m: BregmanManifold, p: Point, q: Point, dc=DualCoordinate.PRIMAL) -> float:
    """``B_G(x_p : x_q)`` with G = F (PRIMAL, theta) or F* (DUAL, eta)."""
    dc = DualCoordinate.parse(dc)
    return _bregman(m, dc, m.coords(p, dc.tag), m.coords(q, dc.tag))


def fenchel_young_divergence(m: BregmanManifold, p_theta: Point, q_eta: Point) -> float:
    """``F(theta_p) + F*(eta_q) - <theta_p, eta_q>``."""
    dc = DualCoordinate.PRIMAL
    theta = m.coords(p_theta, dc.tag)
    eta = m.coords(q_eta, dc.opposite.tag)
    return float(m.potential(dc, theta) + m.potential(dc.opposite, eta) - np.dot(theta, eta))


def skew_jensen_divergence(
    m: BregmanManifold, p: Point, q: Point, alpha: float = 0.0, dc=DualCoordinate.PRIMAL, scaled: bool = True
) -> float:
    """Zhang alpha-divergence (``scaled``) or the bare Jensen gap of G at the skewed mix."""
    alpha = float(alpha)
    if not -1.0 <= alpha <= 1.0:
        raise ArgumentError(f"alpha must lie in [-1, 1], got {alpha!r}")
    dc = DualCoordinate.parse(dc)
    x1 = m.coords(p, dc.tag)
    x2 = m.coords(q, dc.tag)
    if scaled and alpha == -1.0:
        return _bregman(m, dc, x1, x2)
    if scaled and alpha == 1.0:
        return _bregman(m, dc, x2, x1)
    a, b = (1.0 + alpha) / 2.0, (1.0 - alpha) / 2.0
    gap = a * m.potential(dc, x1) + b * m.potential(dc, x2) - m.potential(dc, a * x1 + b * x2)
    if scaled:
        return float(4.0 / (1.0 - alpha * alpha) * gap)
    return float(gap)


def bhattacharyya_distance(m: BregmanManifold, p: Point, q: Point) -> float:
    """Midpoint Jensen gap of the cumulant: the Bhattacharyya distance of an exponential family."""
    t1 = m.coords(p, DualCoordinate.PRIMAL.tag)
    t2 = m.coords(q, DualCoordinate.PRIMAL.tag)
    f = m.theta_generator.value
    return float(f(t1) / 2.0 + f(t2) / 2.0 - f((t1 + t2) / 2.0))


class Dissimilarity:
    """Callable ``(Point, Point) -> float`` bound to a manifold."""

    def __init__(self, manifold: BregmanManifold):
        self.manifold = manifold

    def __call__(self, p: Point, q: Point) -> float:
        raise NotImplementedError


class BregmanDivergence(Dissimilarity):
    def __init__(self, manifold, dcoords=DualCoordinate.PRIMAL):
        super().__init__(manifold)
        self.dcoords = DualCoordinate.parse(dcoords)

    def __call__(self, p, q):
        return bregman_divergence(self.manifold, p, q, self.dcoords)


class FenchelYoungDivergence(Dissimilarity):
    def __call__(self, p, q):
        return fenchel_young_divergence(self.manifold, p, q)


class SkewJensenDivergence(Dissimilarity):
    def __init__(self, manifold, alpha=0.0, dcoords=DualCoordinate.PRIMAL, scaled=True):
        super().__init__(manifold)
        self.alpha = alpha
        self.dcoords = DualCoordinate.parse(dcoords)
        self.scaled = scaled

    def __call__(self, p, q):
        return skew_jensen_divergence(self.manifold, p, q, self.alpha, self.dcoords, self.scaled)


class BhattacharyyaDistance(Dissimilarity):
    def __call__(self, p, q):
        return bhattacharyya_distance(self.manifold, p, q)
