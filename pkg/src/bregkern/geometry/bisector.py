"""Bregman bisectors: hyperplanes of points equidistant from two sites."""

from __future__ import annotations

import numpy as np

from bregkern.core.coords import DualCoordinate, Point
from bregkern.core.manifold import BregmanManifold
from bregkern.errors import DegenerateError


class BregmanBisector:
    """Hyperplane ``<x, normal> = offset`` in the ``dcoords`` coordinate.

    PRIMAL: theta-points x with ``B_F(x : p) = B_F(x : q)``.
    DUAL: eta-points x with ``B_F(p : x) = B_F(q : x)``.
    """

    def __init__(self, manifold: BregmanManifold, p: Point, q: Point, dcoords=DualCoordinate.PRIMAL):
        self.manifold = manifold
        self.p = p
        self.q = q
        self.dcoords = dc = DualCoordinate.parse(dcoords)
        other = dc.opposite
        # normal lives in the opposite coordinate; offset uses its potential
        yp = manifold.coords(p, other.tag)
        yq = manifold.coords(q, other.tag)
        normal = yq - yp
        if not np.any(normal):
            raise DegenerateError("bisector of coincident points is undefined")
        self.normal = normal
        self.offset = manifold.potential(other, yq) - manifold.potential(other, yp)

    def residual(self, x: Point) -> float:
        v = self.manifold.coords(x, self.dcoords.tag)
        return float(np.dot(v, self.normal) - self.offset)

    def contains(self, x: Point, tol: float = 1e-9) -> bool:
        return abs(self.residual(x)) <= tol * max(1.0, abs(self.offset))

    def project(self, x: Point) -> Point:
        """Euclidean projection (in dcoords) of ``x`` onto the hyperplane."""
        v = self.manifold.coords(x, self.dcoords.tag)
        n = self.normal
        return Point(self.dcoords.tag, v - (np.dot(v, n) - self.offset) / np.dot(n, n) * n)

    def sweep_axis(self, index) -> int:
        """The coordinate of ``index`` that :meth:`sample_line` sweeps."""
        i, j = index
        return i if abs(self.normal[j]) >= abs(self.normal[i]) else j

    def sample_line(self, index, lo: float, hi: float, anchor: Point | None = None, n: int = 256) -> list[Point]:
        """Points of the hyperplane inside the coordinate plane ``index``.

        Coordinates outside ``index`` are frozen at ``anchor`` (default: the
        midpoint of p and q). The coordinate with the larger normal component
        is solved for while the other sweeps ``[lo, hi]``.
        """
        i, j = index
        tag = self.dcoords.tag
        if anchor is None:
            base = 0.5 * (self.manifold.coords(self.p, tag) + self.manifold.coords(self.q, tag))
        else:
            base = self.manifold.coords(anchor, tag)
        sweep = self.sweep_axis(index)
        solve = j if sweep == i else i
        if self.normal[solve] == 0.0:
            raise DegenerateError("bisector is parallel to the requested plane")
        rest = self.offset - (np.dot(base, self.normal) - base[solve] * self.normal[solve] - base[sweep] * self.normal[sweep])
        out = []
        for s in np.linspace(lo, hi, n + 1):
            v = base.copy()
            v[sweep] = s
            v[solve] = (rest - s * self.normal[sweep]) / self.normal[solve]
            out.append(Point(tag, v))
        return out


def bisector(m: BregmanManifold, p: Point, q: Point, dc=DualCoordinate.PRIMAL) -> BregmanBisector:
    return BregmanBisector(m, p, q, dc)
