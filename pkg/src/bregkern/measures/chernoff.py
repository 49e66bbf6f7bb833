"""Chernoff point and Chernoff information for exponential-family manifolds.

For natural parameters ``theta1, theta2`` and ``theta(a) = a theta1 + (1-a) theta2``
the skew Bhattacharyya divergence ``a F(theta1) + (1-a) F(theta2) - F(theta(a))``
is maximised where ``B_F(theta1 : theta(a)) = B_F(theta2 : theta(a))``, i.e. where
the theta-geodesic crosses the dual (eta) bisector. That crossing is located
by bisection on ``a``.
"""

from __future__ import annotations

import numpy as np

from bregkern.core.coords import THETA, Point
from bregkern.core.manifold import BregmanManifold
from bregkern.errors import ConvergenceError, DegenerateError
from bregkern.measures.divergence import Dissimilarity

BRACKET = (1e-9, 1.0 - 1e-9)
MAX_ITER = 200
ALPHA_TOL = 1e-12


def _endpoints(m, p, q):
    t1 = m.coords(p, THETA)
    t2 = m.coords(q, THETA)
    return t1, t2


def equidistance_residual(m: BregmanManifold, p: Point, q: Point, alpha: float) -> float:
    """``B_F(theta1 : theta(a)) - B_F(theta2 : theta(a))``; decreasing in ``a``."""
    t1, t2 = _endpoints(m, p, q)
    gen = m.theta_generator
    eta = gen.gradient(alpha * t1 + (1.0 - alpha) * t2)
    return float(gen.value(t1) - gen.value(t2) - np.dot(t1 - t2, eta))


def chernoff_point(m: BregmanManifold, p: Point, q: Point, tol: float = ALPHA_TOL, max_iter: int = MAX_ITER) -> float:
    """Optimal skew ``a*`` in (0, 1); the Chernoff point is ``a* theta1 + (1 - a*) theta2``."""
    t1, t2 = _endpoints(m, p, q)
    if np.array_equal(t1, t2):
        raise DegenerateError("Chernoff point of identical distributions is undefined")
    gen = m.theta_generator
    f1, f2 = gen.value(t1), gen.value(t2)
    diff = t1 - t2

    def resid(a):
        return f1 - f2 - float(np.dot(diff, gen.gradient(a * t1 + (1.0 - a) * t2)))

    lo, hi = BRACKET
    r_lo, r_hi = resid(lo), resid(hi)
    if not (r_lo > 0.0 > r_hi):
        raise ConvergenceError("Chernoff residual does not change sign on the bracket", 0, last=(lo, hi))
    for it in range(max_iter):
        mid = 0.5 * (lo + hi)
        r_mid = resid(mid)
        if r_mid == 0.0:
            return mid
        if r_mid > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol:
            return 0.5 * (lo + hi)
    raise ConvergenceError("Chernoff bisection", max_iter, last=0.5 * (lo + hi))


def chernoff_information(m: BregmanManifold, p: Point, q: Point) -> float:
    """``B_F(theta1 : theta(a*))``, the maximal skew Bhattacharyya divergence."""
    t1, t2 = _endpoints(m, p, q)
    if np.array_equal(t1, t2):
        return 0.0
    a = chernoff_point(m, p, q)
    gen = m.theta_generator
    ta = a * t1 + (1.0 - a) * t2
    return float(gen.value(t1) - gen.value(ta) - np.dot(t1 - ta, gen.gradient(ta)))


class ChernoffInformation(Dissimilarity):
    def chernoff_point(self, p, q):
        return chernoff_point(self.manifold, p, q)

    def __call__(self, p, q):
        return chernoff_information(self.manifold, p, q)
