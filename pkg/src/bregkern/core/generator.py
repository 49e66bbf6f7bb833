"""Bregman generators: smooth strictly convex scalar fields."""

from __future__ import annotations

import numpy as np

from bregkern.core.autodiff import ad_gradient, ad_hessian
from bregkern.errors import DomainError


class Generator:
    """A strictly convex potential with value, gradient and Hessian.

    Subclasses implement ``_F`` with numpy calls that also work on object
    arrays of dual numbers; gradient and Hessian then come from forward-mode
    AD. Built-in generators override :meth:`gradient` and :meth:`hessian` with
    closed forms and keep ``_F`` for cross-checking.
    """

    def __init__(self, dimension: int):
        if int(dimension) < 1:
            raise ValueError("dimension must be positive")
        self.dimension = int(dimension)

    def _F(self, x):
        raise NotImplementedError

    def require_domain(self, x) -> None:
        """Raise :class:`DomainError` if ``x`` is outside the open domain."""

    def domain_check(self, x) -> bool:
        try:
            self.require_domain(self._as_vector(x))
        except DomainError:
            return False
        return True

    def interior_point(self) -> np.ndarray:
        """Some point strictly inside the domain (Newton starting point)."""
        return np.zeros(self.dimension)

    def _as_vector(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float).reshape(-1)
        if x.shape[0] != self.dimension:
            raise DomainError(f"expected {self.dimension} values, got {x.shape[0]}")
        return x

    def _checked(self, x) -> np.ndarray:
        x = self._as_vector(x)
        self.require_domain(x)
        return x

    def value(self, x) -> float:
        return float(self._F(self._checked(x)))

    def gradient(self, x) -> np.ndarray:
        return ad_gradient(self._F, self._checked(x))

    def hessian(self, x) -> np.ndarray:
        return ad_hessian(self._F, self._checked(x))

    def ad_gradient(self, x) -> np.ndarray:
        return ad_gradient(self._F, self._checked(x))

    def ad_hessian(self, x) -> np.ndarray:
        return ad_hessian(self._F, self._checked(x))

    def __call__(self, x) -> float:
        return self.value(x)


class AutoDiffGenerator(Generator):
    """Generator from a plain function; derivatives by automatic differentiation.

    >>> g = AutoDiffGenerator(lambda x: np.sum(np.exp(x)), 2)
    >>> g.gradient([0.0, 0.0])
    array([1., 1.])
    """

    def __init__(self, fn, dimension: int, domain=None, interior=None):
        super().__init__(dimension)
        self._fn = fn
        self._domain = domain
        self._interior = None if interior is None else np.asarray(interior, dtype=float)

    def _F(self, x):
        return self._fn(x)

    def require_domain(self, x) -> None:
        if self._domain is not None and not self._domain(x):
            raise DomainError("point outside generator domain")

    def interior_point(self) -> np.ndarray:
        if self._interior is not None:
            return self._interior.copy()
        return super().interior_point()


class QuadraticGenerator(Generator):
    """Half squared Euclidean norm; self-conjugate."""

    def _F(self, x):
        return 0.5 * np.dot(x, x)

    def gradient(self, x):
        return self._as_vector(x).copy()

    def hessian(self, x):
        self._as_vector(x)
        return np.eye(self.dimension)
