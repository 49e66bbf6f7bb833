"""Inductive arithmetic-harmonic midpoint iteration."""

from __future__ import annotations

from bregkern.core.coords import DualCoordinate, Point
from bregkern.core.manifold import BregmanManifold
from bregkern.errors import ArgumentError
from bregkern.geometry.geodesic import BregmanGeodesic


def inductive_midpoint_mean(m: BregmanManifold, p: Point, q: Point, iterations: int = 5, callback=None) -> Point:
    """Replace ``(p, q)`` by the (theta-midpoint, eta-midpoint) pair ``iterations`` times.

    On the SPD cone with the logdet generator the two midpoints are the
    arithmetic and harmonic matrix means and both sequences converge
    quadratically to the matrix geometric mean. ``callback(i, p, q)`` sees
    every pair, starting with ``i = 0`` for the inputs.
    """
    if int(iterations) < 1:
        raise ArgumentError("iterations must be a positive integer")
    if callback is not None:
        callback(0, p, q)
    for i in range(1, int(iterations) + 1):
        primal = BregmanGeodesic(m, p, q, DualCoordinate.PRIMAL)
        dual = BregmanGeodesic(m, p, q, DualCoordinate.DUAL)
        p, q = primal.midpoint(), dual.midpoint()
        if callback is not None:
            callback(i, p, q)
    return p
