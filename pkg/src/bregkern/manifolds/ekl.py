"""Two-dimensional manifold of the extended negative Shannon entropy.

``F(x) = x1 log x1 + x2 log x2 - (x1 + x2)`` on the positive quadrant, with
conjugate ``F*(y) = exp(y1) + exp(y2)``. Its Bregman divergence is the
extended Kullback-Leibler divergence between positive measures.
"""

from __future__ import annotations

import numpy as np

from bregkern.core.coords import LAMBDA, THETA
from bregkern.core.generator import Generator
from bregkern.core.manifold import BregmanManifold
from bregkern.errors import DomainError


class ExtendedNegentropy(Generator):
    def require_domain(self, x):
        bad = np.flatnonzero(~(x > 0))
        if bad.size:
            raise DomainError("extended negentropy needs positive entries", index=int(bad[0]))

    def interior_point(self):
        return np.ones(self.dimension)

    def _F(self, x):
        return np.dot(x, np.log(x)) - np.sum(x)

    def gradient(self, x):
        return np.log(self._checked(x))

    def hessian(self, x):
        return np.diag(1.0 / self._checked(x))


class ExponentialSum(Generator):
    def _F(self, x):
        return np.sum(np.exp(x))

    def value(self, x):
        return float(np.sum(np.exp(self._checked(x))))

    def gradient(self, x):
        return np.exp(self._checked(x))

    def hessian(self, x):
        return np.diag(np.exp(self._checked(x)))


class EKL2DManifold(BregmanManifold):
    """Extended-KL plane; lambda coordinates coincide with theta."""

    name = "ekl2d"

    def __init__(self):
        super().__init__(ExtendedNegentropy(2), ExponentialSum(2))
        self.register_coordinates(LAMBDA, 2)
        self.register_conversion(LAMBDA, THETA, lambda x: np.array(x, dtype=float))
        self.register_conversion(THETA, LAMBDA, lambda x: np.array(x, dtype=float))
