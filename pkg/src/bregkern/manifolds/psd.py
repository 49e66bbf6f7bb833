"""The SPD cone with the logdet barrier as Bregman generator."""

from __future__ import annotations

import numpy as np

from bregkern import linalg
from bregkern.core.autodiff import logdet_pd
from bregkern.core.coords import ETA, LAMBDA, THETA, Point
from bregkern.core.generator import Generator
from bregkern.core.manifold import BregmanManifold
from bregkern.errors import DomainError


def linear_map_matrix(apply, n: int) -> np.ndarray:
    """Matrix of a linear map on R^n from its action on the standard basis."""
    eye = np.eye(n)
    cols = [apply(eye[i]) for i in range(n)]
    out = np.column_stack(cols)
    return 0.5 * (out + out.T)


class LogDetGenerator(Generator):
    """``-log det(Theta)`` on svec-flattened SPD matrices."""

    def __init__(self, d: int):
        super().__init__(linalg.tri_size(d))
        self.d = int(d)

    def require_domain(self, x):
        if not linalg.is_spd(linalg.unsvec(x, self.d)):
            raise DomainError("logdet generator needs a positive-definite matrix")

    def interior_point(self):
        return linalg.svec(np.eye(self.d))

    def _F(self, x):
        return -logdet_pd(linalg.unsvec(x, self.d))

    def value(self, x):
        return -linalg.logdet(linalg.unsvec(self._checked(x), self.d))

    def gradient(self, x):
        a = linalg.unsvec(self._checked(x), self.d)
        return linalg.svec(-linalg.spd_inv(a))

    def hessian(self, x):
        inv = linalg.spd_inv(linalg.unsvec(self._checked(x), self.d))
        d = self.d
        return linear_map_matrix(lambda e: linalg.svec(inv @ linalg.unsvec(e, d) @ inv), self.dimension)


class LogDetConjugateGenerator(Generator):
    """Convex conjugate of the logdet barrier: ``-d - log det(-H)`` for negative-definite H."""

    def __init__(self, d: int):
        super().__init__(linalg.tri_size(d))
        self.d = int(d)

    def require_domain(self, x):
        if not linalg.is_spd(-linalg.unsvec(x, self.d)):
            raise DomainError("conjugate logdet generator needs a negative-definite matrix")

    def interior_point(self):
        return linalg.svec(-np.eye(self.d))

    def _F(self, x):
        return -self.d - logdet_pd(-linalg.unsvec(x, self.d))

    def value(self, x):
        return -self.d - linalg.logdet(-linalg.unsvec(self._checked(x), self.d))

    def gradient(self, x):
        h = linalg.unsvec(self._checked(x), self.d)
        return linalg.svec(linalg.spd_inv(-h))

    def hessian(self, x):
        inv = linalg.spd_inv(-linalg.unsvec(self._checked(x), self.d))
        d = self.d
        return linear_map_matrix(lambda e: linalg.svec(inv @ linalg.unsvec(e, d) @ inv), self.dimension)


class PSDManifold(BregmanManifold):
    """Symmetric positive-definite ``d x d`` matrices.

    lambda: upper triangle of the matrix (off-diagonals stored once);
    theta: svec of the matrix; eta: svec of ``-inverse``. The theta midpoint is
    the arithmetic matrix mean and the eta midpoint the harmonic one.
    """

    name = "psd"

    def __init__(self, d: int):
        self.d = int(d)
        super().__init__(LogDetGenerator(self.d), LogDetConjugateGenerator(self.d))
        n = linalg.tri_size(self.d)
        self.register_coordinates(LAMBDA, n)
        self.register_conversion(LAMBDA, THETA, self._lambda_to_theta)
        self.register_conversion(THETA, LAMBDA, lambda x: linalg.upper(linalg.unsvec(x, self.d)))
        self.register_conversion(LAMBDA, ETA, lambda x: linalg.svec(-linalg.spd_inv(self._matrix_from_lambda(x))))

    def __repr__(self):
        return f"PSDManifold(d={self.d})"

    def _matrix_from_lambda(self, x):
        return linalg.check_spd(linalg.from_upper(x, self.d), "PSD point")

    def _lambda_to_theta(self, x):
        return linalg.svec(self._matrix_from_lambda(x))

    def matrix(self, p: Point) -> np.ndarray:
        return linalg.from_upper(self.coords(p, LAMBDA), self.d)

    def point(self, a) -> Point:
        return Point(LAMBDA, linalg.upper(linalg.check_spd(a)))
