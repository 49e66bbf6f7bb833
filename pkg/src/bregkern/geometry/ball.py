"""Bregman balls and the closed-form extended-KL sphere."""

from __future__ import annotations

import math

import numpy as np

from bregkern.core.coords import THETA, DualCoordinate, Point
from bregkern.core.manifold import BregmanManifold
from bregkern.errors import ArgumentError, DomainError
from bregkern.geometry.curve import Curve, check_parameter
from bregkern.geometry.lambertw import lambert_w
from bregkern.measures.divergence import bregman_divergence


class BregmanBall:
    """``{x : B(center : x) < radius}`` for the generator chosen by ``dcoords``.

    Points exactly on the sphere are outside.
    """

    def __init__(self, manifold: BregmanManifold, center: Point, radius: float, dcoords=DualCoordinate.PRIMAL):
        if not radius >= 0:
            raise ArgumentError("radius must be non-negative")
        self.manifold = manifold
        self.dcoords = DualCoordinate.parse(dcoords)
        self.center = manifold.convert(center, self.dcoords.tag)
        self.radius = float(radius)

    @property
    def coords(self):
        return self.dcoords.tag

    def divergence_from_center(self, x: Point) -> float:
        return bregman_divergence(self.manifold, self.center, x, self.dcoords)

    def is_in(self, x: Point) -> bool:
        return self.divergence_from_center(x) < self.radius


def _coordinate_root(c: float, rho: float, branch: int) -> float:
    # c log(c/x) - c + x = rho  <=>  u - log u - 1 = rho/c with u = x/c
    return -c * lambert_w(branch, -math.exp(-1.0 - rho / c))


class EKLBallCurve(Curve):
    """Boundary of ``{x : B_F(center : x) = radius}`` for the extended negentropy.

    The radius is split between the two coordinates as ``(r s, r (1 - s))``
    and each one-dimensional equation is solved with a real Lambert W branch
    (branch 0 gives the root below the center coordinate, branch -1 the one
    above). Four arcs, one per branch pair, close the curve; ``s`` is
    piecewise linear in ``t``.
    """

    # (branch for x1, branch for x2, s at arc start, s at arc end)
    _ARCS = ((-1, 0, 1.0, 0.0), (0, 0, 0.0, 1.0), (0, -1, 1.0, 0.0), (-1, -1, 0.0, 1.0))

    def __init__(self, center: Point, radius: float):
        c = np.asarray(center.data, dtype=float)
        if c.shape != (2,):
            raise ArgumentError("extended-KL sphere is two-dimensional")
        if not np.all(c > 0):
            raise DomainError("center must be strictly positive", index=int(np.flatnonzero(~(c > 0))[0]))
        if not radius > 0:
            raise ArgumentError("radius must be positive")
        self.center = Point(THETA, c)
        self.radius = float(radius)

    def path(self, t: float) -> Point:
        t = check_parameter(t)
        arc = min(int(4 * t), 3)
        local = 4 * t - arc
        b1, b2, s0, s1 = self._ARCS[arc]
        s = s0 + (s1 - s0) * local
        c1, c2 = self.center.data
        r = self.radius
        return Point(THETA, [_coordinate_root(c1, r * s, b1), _coordinate_root(c2, r * (1.0 - s), b2)])


def ekl_ball_curve(center: Point, radius: float) -> EKLBallCurve:
    return EKLBallCurve(center, radius)


class EKL2DBregmanBall(BregmanBall):
    """Primal Bregman ball of the extended-KL plane with its closed-form boundary."""

    def __init__(self, manifold, center: Point, radius: float):
        super().__init__(manifold, center, radius, DualCoordinate.PRIMAL)

    def parametrized_curve(self) -> EKLBallCurve:
        return EKLBallCurve(self.center, self.radius)
