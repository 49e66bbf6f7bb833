"""Categorical, multinomial and discrete-mixture manifolds.

The categorical family read as an exponential family has the cumulant
``log(1 + sum(exp(theta)))`` as generator; read as a mixture family it has the
Shannon negentropy. The two charts are Legendre dual: the mixture manifold's
theta coordinates are the categorical eta coordinates and vice versa.
"""

from __future__ import annotations

import numpy as np

from bregkern.core.coords import ETA, LAMBDA, THETA, Point
from bregkern.core.generator import Generator
from bregkern.core.manifold import BregmanManifold
from bregkern.errors import DomainError

SIMPLEX_ATOL = 1e-9
HISTOGRAM_SMOOTHING = 1e-8


class CumulantGenerator(Generator):
    """``n * log(1 + sum(exp(theta)))``, the (multinomial) categorical cumulant."""

    def __init__(self, dimension: int, trials: float = 1.0):
        super().__init__(dimension)
        self.trials = float(trials)

    def _F(self, x):
        return self.trials * np.log(1.0 + np.sum(np.exp(x)))

    def _probabilities(self, x):
        top = max(0.0, float(np.max(x)))
        e = np.exp(x - top)
        return e / (np.exp(-top) + np.sum(e))

    def value(self, x):
        x = self._checked(x)
        top = max(0.0, float(np.max(x)))
        return float(self.trials * (top + np.log(np.exp(-top) + np.sum(np.exp(x - top)))))

    def gradient(self, x):
        return self.trials * self._probabilities(self._checked(x))

    def hessian(self, x):
        p = self._probabilities(self._checked(x))
        return self.trials * (np.diag(p) - np.outer(p, p))


class NegentropyGenerator(Generator):
    """``sum(eta log(eta/n)) + r log(r/n)`` with ``r = n - sum(eta)``.

    At ``n = 1`` this is the Shannon negentropy of the probability vector
    ``(eta, 1 - sum(eta))``.
    """

    def __init__(self, dimension: int, trials: float = 1.0):
        super().__init__(dimension)
        self.trials = float(trials)

    def require_domain(self, x):
        bad = np.flatnonzero(~(x > 0))
        if bad.size:
            raise DomainError("negentropy needs positive entries", index=int(bad[0]))
        if not np.sum(x) < self.trials:
            raise DomainError(f"negentropy needs sum of entries below {self.trials:g}")

    def interior_point(self):
        return np.full(self.dimension, self.trials / (self.dimension + 1))

    def _F(self, x):
        rest = self.trials - np.sum(x)
        return np.dot(x, np.log(x / self.trials)) + rest * np.log(rest / self.trials)

    def gradient(self, x):
        x = self._checked(x)
        return np.log(x) - np.log(self.trials - np.sum(x))

    def hessian(self, x):
        x = self._checked(x)
        return np.diag(1.0 / x) + 1.0 / (self.trials - np.sum(x))


def check_simplex(p) -> np.ndarray:
    p = np.asarray(p, dtype=float).reshape(-1)
    bad = np.flatnonzero(~(p > 0))
    if bad.size:
        raise DomainError("probabilities must be strictly positive", index=int(bad[0]))
    if abs(np.sum(p) - 1.0) > SIMPLEX_ATOL:
        raise DomainError(f"probabilities sum to {np.sum(p)!r}, not 1")
    return p


def smooth_histogram(counts, smoothing: float = HISTOGRAM_SMOOTHING) -> np.ndarray:
    """Add ``smoothing`` to every bin and renormalise into the open simplex."""
    counts = np.asarray(counts, dtype=float).reshape(-1)
    if np.any(counts < 0):
        raise DomainError("histogram counts must be non-negative", index=int(np.flatnonzero(counts < 0)[0]))
    h = counts + smoothing
    return h / np.sum(h)


def _softmax_full(theta):
    theta = np.asarray(theta, dtype=float)
    top = max(0.0, float(np.max(theta)))
    e = np.exp(np.append(theta, 0.0) - top)
    return e / np.sum(e)


def _log_ratios(p):
    p = check_simplex(p)
    return np.log(p[:-1]) - np.log(p[-1])


class MultinomialManifold(BregmanManifold):
    """Multinomial distributions over ``k`` categories with ``n`` trials.

    lambda: probability vector (k entries); theta: ``log(p_i/p_k)``;
    eta: ``n * p_i`` for ``i < k``.
    """

    name = "multinomial"

    def __init__(self, k: int, n: float = 1.0):
        if int(k) < 2:
            raise ValueError("need at least two categories")
        self.k = int(k)
        self.n = float(n)
        super().__init__(CumulantGenerator(self.k - 1, self.n), NegentropyGenerator(self.k - 1, self.n))
        self.register_coordinates(LAMBDA, self.k)
        self.register_conversion(LAMBDA, THETA, _log_ratios)
        self.register_conversion(THETA, LAMBDA, _softmax_full)
        self.register_conversion(LAMBDA, ETA, lambda p: self.n * check_simplex(p)[:-1])
        self.register_conversion(ETA, LAMBDA, self._eta_to_lambda)

    def _eta_to_lambda(self, eta):
        p = np.asarray(eta, dtype=float) / self.n
        return check_simplex(np.append(p, 1.0 - np.sum(p)))

    def __repr__(self):
        return f"{type(self).__name__}(k={self.k}, n={self.n:g})"


class CategoricalManifold(MultinomialManifold):
    """Categorical distributions: the single-trial multinomial manifold."""

    name = "categorical"

    def __init__(self, k: int):
        super().__init__(k, 1.0)

    def __repr__(self):
        return f"CategoricalManifold(k={self.k})"

    def to_discrete_mixture_manifold(self) -> DiscreteMixtureManifold:
        return DiscreteMixtureManifold(self.k)

    def point_to_mixture_point(self, p: Point) -> Point:
        return categorical_to_mixture(self, p)


class DiscreteMixtureManifold(BregmanManifold):
    """Mixtures of ``k`` Dirac masses; generator is the Shannon negentropy.

    lambda: probability vector; theta: the first ``k-1`` weights;
    eta: ``log(p_i/p_k)`` (the categorical natural parameters).
    """

    name = "mixture"

    def __init__(self, k: int):
        if int(k) < 2:
            raise ValueError("need at least two components")
        self.k = int(k)
        super().__init__(NegentropyGenerator(self.k - 1), CumulantGenerator(self.k - 1))
        self.register_coordinates(LAMBDA, self.k)
        self.register_conversion(LAMBDA, THETA, lambda p: check_simplex(p)[:-1])
        self.register_conversion(THETA, LAMBDA, lambda w: check_simplex(np.append(w, 1.0 - np.sum(w))))
        self.register_conversion(LAMBDA, ETA, _log_ratios)
        self.register_conversion(ETA, LAMBDA, _softmax_full)

    def __repr__(self):
        return f"DiscreteMixtureManifold(k={self.k})"

    def to_categorical_manifold(self) -> CategoricalManifold:
        return CategoricalManifold(self.k)

    def point_to_categorical_point(self, p: Point) -> Point:
        return mixture_to_categorical(self, p)


def categorical_to_mixture(cat: CategoricalManifold, p: Point) -> Point:
    """Mixture-manifold theta point holding the first ``k-1`` probabilities of ``p``."""
    probs = check_simplex(cat.coords(p, LAMBDA))
    return Point(THETA, probs[:-1])


def mixture_to_categorical(mix: DiscreteMixtureManifold, p: Point) -> Point:
    """Categorical lambda point (full probability vector) of a mixture point."""
    weights = mix.coords(p, THETA)
    return Point(LAMBDA, check_simplex(np.append(weights, 1.0 - np.sum(weights))))
