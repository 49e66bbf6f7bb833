"""Geodesics of the two flat connections."""

from __future__ import annotations

import numpy as np

from bregkern.core.coords import DualCoordinate, Point
from bregkern.core.manifold import BregmanManifold
from bregkern.geometry.curve import Curve, check_parameter


class BregmanGeodesic(Curve):
    """theta- or eta-geodesic: a straight segment in its own affine coordinate."""

    def __init__(self, manifold: BregmanManifold, source: Point, dest: Point, dcoords=DualCoordinate.PRIMAL):
        self.manifold = manifold
        self.source = source
        self.dest = dest
        self.dcoords = DualCoordinate.parse(dcoords)
        self._src = manifold.coords(source, self.dcoords.tag)
        self._dst = manifold.coords(dest, self.dcoords.tag)

    def __repr__(self):
        return f"BregmanGeodesic({self.source!r} -> {self.dest!r}, {self.dcoords.name})"

    def path(self, t: float) -> Point:
        t = check_parameter(t)
        return Point(self.dcoords.tag, (1 - t) * self._src + t * self._dst)

    def midpoint(self) -> Point:
        return Point(self.dcoords.tag, 0.5 * (self._src + self._dst))

    def velocity(self) -> np.ndarray:
        """Constant tangent vector in the geodesic's own coordinates."""
        return self._dst - self._src


def geodesic(m: BregmanManifold, src: Point, dst: Point, dc=DualCoordinate.PRIMAL) -> BregmanGeodesic:
    return BregmanGeodesic(m, src, dst, dc)
