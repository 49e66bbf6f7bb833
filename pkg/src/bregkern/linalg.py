"""Symmetric-matrix flattening and eigendecomposition-based matrix functions.

Two flattenings of a symmetric ``d x d`` matrix are used, both holding the
``d(d+1)/2`` upper-triangular entries in row-major order:

* ``upper``: entries as they are (ordinary lambda parameters);
* ``svec``: off-diagonal entries scaled by ``sqrt(2)``, so that the plain
  dot product of two flattened vectors equals ``trace(A @ B)``.
"""

from __future__ import annotations

import math

import numpy as np

from bregkern.errors import DomainError

EIGEN_FLOOR = 1e-300
SQRT2 = math.sqrt(2.0)


def tri_size(d: int) -> int:
    return d * (d + 1) // 2


def side_from_tri(n: int) -> int:
    d = int(round((math.sqrt(8 * n + 1) - 1) / 2))
    if tri_size(d) != n:
        raise ValueError(f"{n} is not a triangular number")
    return d


def _offdiag_weights(d: int) -> np.ndarray:
    rows, cols = np.triu_indices(d)
    return np.where(rows == cols, 1.0, SQRT2)


def upper(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    return a[np.triu_indices(a.shape[0])].copy()


def from_upper(v, d: int | None = None) -> np.ndarray:
    v = np.asarray(v)
    d = side_from_tri(v.shape[0]) if d is None else d
    out = np.zeros((d, d), dtype=v.dtype)
    rows, cols = np.triu_indices(d)
    out[rows, cols] = v
    out[cols, rows] = v
    return out


def svec(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    return upper(a) * _offdiag_weights(a.shape[0])


def unsvec(v, d: int | None = None) -> np.ndarray:
    v = np.asarray(v)
    d = side_from_tri(v.shape[0]) if d is None else d
    return from_upper(v / _offdiag_weights(d), d)


def sym(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a + a.T)


def check_spd(a: np.ndarray, what: str = "matrix") -> np.ndarray:
    """Return ``a`` symmetrised, raising :class:`DomainError` unless it is SPD."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"{what} must be square")
    if not np.all(np.isfinite(a)):
        raise DomainError(f"{what} has non-finite entries")
    s = sym(a)
    if not np.allclose(s, a, rtol=1e-8, atol=1e-12):
        raise DomainError(f"{what} is not symmetric")
    try:
        np.linalg.cholesky(s)
    except np.linalg.LinAlgError:
        raise DomainError(f"{what} is not positive definite") from None
    return s


def is_spd(a: np.ndarray) -> bool:
    try:
        np.linalg.cholesky(sym(np.asarray(a, dtype=float)))
    except np.linalg.LinAlgError:
        return False
    return True


def _eig(a):
    w, v = np.linalg.eigh(sym(a))
    if w[0] <= 0:
        raise DomainError("matrix is not positive definite")
    return np.maximum(w, EIGEN_FLOOR), v


def spd_function(a, fn) -> np.ndarray:
    w, v = _eig(a)
    return sym((v * fn(w)) @ v.T)


def spd_power(a, p: float) -> np.ndarray:
    return spd_function(a, lambda w: w**p)


def spd_sqrt(a) -> np.ndarray:
    return spd_function(a, np.sqrt)


def spd_invsqrt(a) -> np.ndarray:
    return spd_function(a, lambda w: 1.0 / np.sqrt(w))


def spd_inv(a) -> np.ndarray:
    return spd_function(a, lambda w: 1.0 / w)


def spd_log(a) -> np.ndarray:
    return spd_function(a, np.log)


def logdet(a) -> float:
    sign, value = np.linalg.slogdet(a)
    if sign <= 0:
        raise DomainError("matrix is not positive definite")
    return float(value)


def spd_geodesic(a, b, t: float) -> np.ndarray:
    """Affine-invariant geodesic ``a^1/2 (a^-1/2 b a^-1/2)^t a^1/2``."""
    s = spd_sqrt(a)
    si = spd_invsqrt(a)
    return sym(s @ spd_power(sym(si @ b @ si), t) @ s)


def spd_geometric_mean(a, b) -> np.ndarray:
    """Matrix geometric mean ``a # b``, the midpoint of the affine-invariant geodesic."""
    a = check_spd(a, "A")
    b = check_spd(b, "B")
    return spd_geodesic(a, b, 0.5)
