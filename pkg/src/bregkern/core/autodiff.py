"""Forward-mode automatic differentiation with (nested) dual numbers.

A scalar field written with plain numpy calls (``np.log``, ``np.exp``,
``np.sum``, ``np.dot``, arithmetic operators) can be evaluated on an object
array of :class:`Dual` values: numpy's object loops dispatch ``np.log`` to
``Dual.log`` and so on. Gradients use one pass with a vector tangent;
Hessians nest a scalar-seeded dual around the vector-tangent one, one pass
per row.

The helpers :func:`cholesky`, :func:`logdet_pd` and :func:`solve_pd` are
written with elementary operations only so matrix-valued generators can be
differentiated the same way.
"""

from __future__ import annotations

import math

import numpy as np

from bregkern.errors import DomainError


class Dual:
    """Dual number ``val + eps * e`` with ``e**2 == 0``.

    ``val`` and ``eps`` may themselves be duals (nesting) and ``eps`` may be
    a float vector (several tangent directions at once).
    """

    __slots__ = ("val", "eps")

    def __init__(self, val, eps):
        self.val = val
        self.eps = eps

    def __repr__(self) -> str:
        return f"Dual({self.val!r}, {self.eps!r})"

    # arithmetic

    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val + other.val, self.eps + other.eps)
        return Dual(self.val + other, self.eps)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val - other.val, self.eps - other.eps)
        return Dual(self.val - other, self.eps)

    def __rsub__(self, other):
        return Dual(other - self.val, -self.eps)

    def __neg__(self):
        return Dual(-self.val, -self.eps)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val * other.val, self.eps * other.val + other.eps * self.val)
        return Dual(self.val * other, self.eps * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Dual):
            if _real(other) == 0.0:
                raise DomainError("division by zero", index=_dependency_index(other))
            return Dual(
                self.val / other.val,
                (self.eps * other.val - other.eps * self.val) / (other.val * other.val),
            )
        return Dual(self.val / other, self.eps / other)

    def __rtruediv__(self, other):
        if _real(self) == 0.0:
            raise DomainError("division by zero", index=_dependency_index(self))
        return Dual(other / self.val, -(self.eps * other) / (self.val * self.val))

    def __pow__(self, power):
        if isinstance(power, Dual):
            return (self.log() * power).exp()
        if power == 0:
            return Dual(_one_like(self.val), self.eps * 0.0)
        return Dual(self.val**power, self.eps * (power * self.val ** (power - 1)))

    def __rpow__(self, base):
        return (self * math.log(base)).exp()

    # comparisons act on the real part so numpy reductions like max() work

    def __lt__(self, other):
        return _real(self) < _real(other)

    def __le__(self, other):
        return _real(self) <= _real(other)

    def __gt__(self, other):
        return _real(self) > _real(other)

    def __ge__(self, other):
        return _real(self) >= _real(other)

    # elementary functions, reached by numpy ufuncs on object arrays

    def log(self):
        if not _real(self) > 0.0:
            raise DomainError("log of non-positive value", index=_dependency_index(self))
        return Dual(_log(self.val), self.eps / self.val)

    def exp(self):
        e = _exp(self.val)
        return Dual(e, self.eps * e)

    def sqrt(self):
        if not _real(self) > 0.0:
            raise DomainError("sqrt of non-positive value", index=_dependency_index(self))
        s = _sqrt(self.val)
        return Dual(s, self.eps / (2.0 * s))

    def log1p(self):
        return (self + 1.0).log()


def _real(x) -> float:
    while isinstance(x, Dual):
        x = x.val
    return float(x)


def _one_like(x):
    return Dual(_one_like(x.val), x.eps * 0.0) if isinstance(x, Dual) else 1.0


def _dependency_index(x):
    """First input coordinate the innermost tangent of ``x`` depends on."""
    while isinstance(x, Dual) and isinstance(x.val, Dual):
        x = x.val
    if isinstance(x, Dual):
        eps = np.atleast_1d(np.asarray(x.eps, dtype=float))
        nz = np.flatnonzero(eps)
        if nz.size:
            return int(nz[0])
    return None


def _log(v):
    return v.log() if isinstance(v, Dual) else math.log(v)


def _exp(v):
    return v.exp() if isinstance(v, Dual) else math.exp(v)


def _sqrt(v):
    return v.sqrt() if isinstance(v, Dual) else math.sqrt(v)


def log(x):
    """Elementwise log that raises :class:`DomainError` instead of returning nan."""
    if isinstance(x, Dual):
        return x.log()
    arr = np.asarray(x)
    if arr.dtype == object:
        return np.log(arr)
    if np.any(arr <= 0):
        bad = np.flatnonzero(np.atleast_1d(arr) <= 0)[0]
        raise DomainError("log of non-positive value", index=int(bad))
    return np.log(arr)


def ad_gradient(f, x) -> np.ndarray:
    """Exact gradient of ``f`` at ``x`` through dual-number arithmetic."""
    x = np.asarray(x, dtype=float).reshape(-1)
    n = x.shape[0]
    eye = np.eye(n)
    xs = np.empty(n, dtype=object)
    for i in range(n):
        xs[i] = Dual(float(x[i]), eye[i].copy())
    y = f(xs)
    if not isinstance(y, Dual):
        return np.zeros(n)
    return np.array(y.eps, dtype=float).reshape(n)


def ad_hessian(f, x) -> np.ndarray:
    """Exact Hessian of ``f`` at ``x`` via nested duals, symmetrised."""
    x = np.asarray(x, dtype=float).reshape(-1)
    n = x.shape[0]
    eye = np.eye(n)
    zeros = np.zeros(n)
    hess = np.zeros((n, n))
    for j in range(n):
        xs = np.empty(n, dtype=object)
        for i in range(n):
            xs[i] = Dual(Dual(float(x[i]), eye[i].copy()), Dual(eye[j, i], zeros.copy()))
        y = f(xs)
        if isinstance(y, Dual) and isinstance(y.eps, Dual):
            hess[j] = np.asarray(y.eps.eps, dtype=float)
    return 0.5 * (hess + hess.T)


def ad_value_and_gradient(f, x):
    x = np.asarray(x, dtype=float).reshape(-1)
    n = x.shape[0]
    eye = np.eye(n)
    xs = np.empty(n, dtype=object)
    for i in range(n):
        xs[i] = Dual(float(x[i]), eye[i].copy())
    y = f(xs)
    if not isinstance(y, Dual):
        return float(y), np.zeros(n)
    return _real(y), np.array(y.eps, dtype=float).reshape(n)


# Matrix helpers built from elementary operations only.


def cholesky(a):
    """Lower Cholesky factor of a positive-definite matrix (float or dual entries)."""
    a = np.asarray(a)
    n = a.shape[0]
    low = np.empty((n, n), dtype=object)
    low[...] = 0.0
    for j in range(n):
        s = a[j, j]
        for k in range(j):
            s = s - low[j, k] * low[j, k]
        if not _real(s) > 0.0:
            raise DomainError("matrix is not positive definite", index=_dependency_index(s))
        d = _sqrt(s)
        low[j, j] = d
        for i in range(j + 1, n):
            s = a[i, j]
            for k in range(j):
                s = s - low[i, k] * low[j, k]
            low[i, j] = s / d
    return low


def logdet_pd(a):
    low = cholesky(a)
    total = 0.0
    for i in range(low.shape[0]):
        total = total + _log(low[i, i])
    return 2.0 * total


def solve_pd(a, b):
    """Solve ``a x = b`` for positive-definite ``a`` by forward/back substitution."""
    low = cholesky(a)
    n = low.shape[0]
    b = np.asarray(b)
    y = np.empty(n, dtype=object)
    for i in range(n):
        s = b[i]
        for k in range(i):
            s = s - low[i, k] * y[k]
        y[i] = s / low[i, i]
    x = np.empty(n, dtype=object)
    for i in reversed(range(n)):
        s = y[i]
        for k in range(i + 1, n):
            s = s - low[k, i] * x[k]
        x[i] = s / low[i, i]
    return x
