"""Multivariate normal distributions as an exponential-family Bregman manifold.

Coordinates (``d`` = sample dimension, matrices flattened per
:mod:`bregkern.linalg`):

* lambda: ``(mu, upper(Sigma))``
* theta:  ``(Sigma^-1 mu, svec(-Sigma^-1 / 2))``
* eta:    ``(mu, svec(Sigma + mu mu^T))``

The primal generator is the log-normaliser
``F(theta) = mu^T Sigma^-1 mu / 2 + log det(Sigma) / 2 + d log(2 pi) / 2``
and its conjugate the negative differential entropy.
"""

from __future__ import annotations

import math

import numpy as np

from bregkern import linalg
from bregkern.core.autodiff import logdet_pd, solve_pd
from bregkern.core.coords import ETA, LAMBDA, THETA, Point
from bregkern.core.generator import Generator
from bregkern.core.manifold import BregmanManifold
from bregkern.errors import ArgumentError, DomainError
from bregkern.geometry.curve import Curve, check_parameter
from bregkern.manifolds.psd import linear_map_matrix

LOG_2PI = math.log(2.0 * math.pi)


def _split(x, d):
    x = np.asarray(x)
    return x[:d], linalg.unsvec(x[d:], d)


def _join(vec, mat):
    return np.concatenate([np.asarray(vec, dtype=float), linalg.svec(mat)])


class GaussianCumulant(Generator):
    """Log-normaliser of N(mu, Sigma) in natural parameters."""

    def __init__(self, d: int):
        super().__init__(d + linalg.tri_size(d))
        self.d = int(d)

    def require_domain(self, x):
        _, m = _split(x, self.d)
        if not linalg.is_spd(-m):
            raise DomainError("second natural parameter must be negative definite")

    def interior_point(self):
        return _join(np.zeros(self.d), -0.5 * np.eye(self.d))

    def _F(self, x):
        v, m = _split(x, self.d)
        prec = -2.0 * m
        return 0.5 * np.dot(v, solve_pd(prec, v)) - 0.5 * logdet_pd(prec) + 0.5 * self.d * LOG_2PI

    def _moments(self, x):
        v, m = _split(self._checked(x), self.d)
        cov = linalg.spd_inv(-2.0 * m)
        return cov @ v, cov

    def value(self, x):
        v, m = _split(self._checked(x), self.d)
        prec = -2.0 * m
        mu = np.linalg.solve(prec, v)
        return float(0.5 * np.dot(v, mu) - 0.5 * linalg.logdet(prec) + 0.5 * self.d * LOG_2PI)

    def gradient(self, x):
        mu, cov = self._moments(x)
        return _join(mu, cov + np.outer(mu, mu))

    def hessian(self, x):
        mu, cov = self._moments(x)
        d = self.d

        def apply(e):
            dv, dm = _split(e, d)
            dmu = 2.0 * cov @ dm @ mu + cov @ dv
            dcov = 2.0 * cov @ dm @ cov
            return _join(dmu, dcov + np.outer(dmu, mu) + np.outer(mu, dmu))

        return linear_map_matrix(apply, self.dimension)


class GaussianNegentropy(Generator):
    """Negative differential entropy of N(mu, Sigma) in expectation parameters."""

    def __init__(self, d: int):
        super().__init__(d + linalg.tri_size(d))
        self.d = int(d)

    def _cov(self, x):
        mu, second = _split(x, self.d)
        return mu, second - np.outer(mu, mu)

    def require_domain(self, x):
        _, cov = self._cov(x)
        if not linalg.is_spd(cov):
            raise DomainError("second moment minus mu mu^T must be positive definite")

    def interior_point(self):
        return _join(np.zeros(self.d), np.eye(self.d))

    def _F(self, x):
        _, cov = self._cov(x)
        return -0.5 * logdet_pd(cov) - 0.5 * self.d * (1.0 + LOG_2PI)

    def value(self, x):
        _, cov = self._cov(self._checked(x))
        return -0.5 * linalg.logdet(cov) - 0.5 * self.d * (1.0 + LOG_2PI)

    def gradient(self, x):
        mu, cov = self._cov(self._checked(x))
        prec = linalg.spd_inv(cov)
        return _join(prec @ mu, -0.5 * prec)

    def hessian(self, x):
        mu, cov = self._cov(self._checked(x))
        prec = linalg.spd_inv(cov)
        d = self.d

        def apply(e):
            dmu, dsecond = _split(e, d)
            dcov = dsecond - np.outer(dmu, mu) - np.outer(mu, dmu)
            return _join(-prec @ dcov @ prec @ mu + prec @ dmu, 0.5 * prec @ dcov @ prec)

        return linear_map_matrix(apply, self.dimension)


class GaussianManifold(BregmanManifold):
    """Normal distributions N(mu, Sigma) on R^d."""

    name = "gaussian"

    def __init__(self, d: int):
        self.d = int(d)
        if self.d < 1:
            raise ValueError("sample dimension must be positive")
        super().__init__(GaussianCumulant(self.d), GaussianNegentropy(self.d))
        self.register_coordinates(LAMBDA, self.dimension)
        self.register_conversion(LAMBDA, THETA, self._lambda_to_theta)
        self.register_conversion(THETA, LAMBDA, self._theta_to_lambda)
        self.register_conversion(LAMBDA, ETA, self._lambda_to_eta)
        self.register_conversion(ETA, LAMBDA, self._eta_to_lambda)

    def __repr__(self):
        return f"GaussianManifold(d={self.d})"

    def _lambda_parts(self, x):
        x = np.asarray(x, dtype=float)
        cov = linalg.check_spd(linalg.from_upper(x[self.d :], self.d), "covariance")
        return x[: self.d], cov

    def _lambda_to_theta(self, x):
        mu, cov = self._lambda_parts(x)
        prec = linalg.spd_inv(cov)
        return _join(prec @ mu, -0.5 * prec)

    def _theta_to_lambda(self, x):
        v, m = _split(x, self.d)
        cov = linalg.spd_inv(linalg.check_spd(-2.0 * m, "precision"))
        return np.concatenate([cov @ v, linalg.upper(cov)])

    def _lambda_to_eta(self, x):
        mu, cov = self._lambda_parts(x)
        return _join(mu, cov + np.outer(mu, mu))

    def _eta_to_lambda(self, x):
        mu, second = _split(x, self.d)
        cov = linalg.check_spd(second - np.outer(mu, mu), "covariance")
        return np.concatenate([mu, linalg.upper(cov)])

    def mean_cov(self, p: Point) -> tuple[np.ndarray, np.ndarray]:
        return self._lambda_parts(self.coords(p, LAMBDA))

    def point(self, mu, cov) -> Point:
        mu = np.atleast_1d(np.asarray(mu, dtype=float))
        cov = linalg.check_spd(np.atleast_2d(np.asarray(cov, dtype=float)), "covariance")
        if mu.shape[0] != self.d or cov.shape != (self.d, self.d):
            raise DomainError(f"expected mean of length {self.d} and {self.d}x{self.d} covariance")
        return Point(LAMBDA, np.concatenate([mu, linalg.upper(cov)]))

    def to_display(self, p, tag):
        # univariate normals are drawn in the (mu, sigma) half-plane
        v = self.coords(p, tag)
        if self.d == 1 and tag == LAMBDA:
            return np.array([v[0], math.sqrt(v[1])])
        return v

    def from_display(self, v, tag):
        v = np.asarray(v, dtype=float)
        if self.d == 1 and tag == LAMBDA:
            return Point(LAMBDA, [v[0], v[1] ** 2])
        return Point(tag, v)


def gaussian_kl(g: GaussianManifold, p: Point, q: Point) -> float:
    """KL(p : q) between two normals, closed form."""
    mu1, s1 = g.mean_cov(p)
    mu2, s2 = g.mean_cov(q)
    dmu = mu2 - mu1
    prec2 = linalg.spd_inv(s2)
    return float(
        0.5 * (np.trace(prec2 @ s1) + dmu @ prec2 @ dmu - g.d + linalg.logdet(s2) - linalg.logdet(s1))
    )


def _half_plane_distance(x1, y1, x2, y2):
    return math.acosh(1.0 + ((x1 - x2) ** 2 + (y1 - y2) ** 2) / (2.0 * y1 * y2))


def fisher_rao_distance_uni(g: GaussianManifold, p: Point, q: Point) -> float:
    """Rao distance between univariate normals via the Poincare half-plane."""
    if g.d != 1:
        raise ArgumentError("closed-form Fisher-Rao distance needs a univariate Gaussian manifold")
    mu1, s1 = g.mean_cov(p)
    mu2, s2 = g.mean_cov(q)
    sig1, sig2 = math.sqrt(s1[0, 0]), math.sqrt(s2[0, 0])
    root2 = math.sqrt(2.0)
    return root2 * _half_plane_distance(mu1[0] / root2, sig1, mu2[0] / root2, sig2)


def _embed(mu, cov):
    d = mu.shape[0]
    out = np.empty((d + 1, d + 1))
    out[:d, :d] = cov + np.outer(mu, mu)
    out[:d, d] = mu
    out[d, :d] = mu
    out[d, d] = 1.0
    return out


def _project(big):
    big = big / big[-1, -1]
    mu = big[:-1, -1]
    return mu, linalg.sym(big[:-1, :-1] - np.outer(mu, mu))


class FisherRaoGeodesic(Curve):
    """Approximate Fisher-Rao geodesic between two normals.

    ``N(mu, Sigma)`` is embedded as the SPD matrix
    ``[[Sigma + mu mu^T, mu], [mu^T, 1]]``; the affine-invariant SPD geodesic
    between the embeddings is projected back after rescaling the corner entry
    to 1. Exact on same-mean pairs with zero mean.
    """

    methods = ("embedding",)

    def __init__(self, manifold: GaussianManifold, source: Point, dest: Point, method: str = "embedding"):
        if method not in self.methods:
            raise ArgumentError(f"unknown Fisher-Rao geodesic method {method!r}")
        self.manifold = manifold
        self.source = source
        self.dest = dest
        self.method = method
        self._start = _embed(*manifold.mean_cov(source))
        self._end = _embed(*manifold.mean_cov(dest))
        self._sqrt = linalg.spd_sqrt(self._start)
        inv_sqrt = linalg.spd_invsqrt(self._start)
        self._inner = linalg.sym(inv_sqrt @ self._end @ inv_sqrt)

    def path(self, t):
        t = check_parameter(t)
        big = linalg.sym(self._sqrt @ linalg.spd_power(self._inner, t) @ self._sqrt)
        mu, cov = _project(big)
        return self.manifold.point(mu, cov)


def fisher_rao_geodesic(g: GaussianManifold, p: Point, q: Point, method: str = "embedding") -> FisherRaoGeodesic:
    return FisherRaoGeodesic(g, p, q, method)
