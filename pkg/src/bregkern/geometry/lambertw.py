"""Real branches of the Lambert W function by Halley iteration."""

from __future__ import annotations

import math

from bregkern.errors import ArgumentError, ConvergenceError, DomainError

BRANCH_POINT = -math.exp(-1.0)
MAX_ITER = 64
# 1/e as an unevaluated sum so that x + 1/e keeps its digits near the branch point
_INV_E_HI = 0.36787944117144233
_INV_E_LO = -1.2428753672788363e-17
# W = sum c_k p^k with p = +-sqrt(2 (e x + 1))
_BRANCH_SERIES = (
    -1.0, 1.0, -1.0 / 3.0, 11.0 / 72.0, -43.0 / 540.0, 769.0 / 17280.0, -221.0 / 8505.0,
    680863.0 / 43545600.0, -1963.0 / 204120.0, 226287557.0 / 37623398400.0,
)
_SERIES_RADIUS = 1e-2


def _branch_distance(x: float) -> float:
    return 2.0 * math.e * ((x + _INV_E_HI) + _INV_E_LO)


def _branch_series(p: float) -> float:
    acc = 0.0
    for c in reversed(_BRANCH_SERIES):
        acc = acc * p + c
    return acc


def _initial(branch: int, x: float) -> float:
    # series about the branch point, asymptotics elsewhere
    p2 = _branch_distance(x)
    p = math.sqrt(max(p2, 0.0))
    if branch == 0:
        if x < -0.25:
            return -1.0 + p - p2 / 6.0
        if x < 3.0:
            return math.log1p(x)
        lx = math.log(x)
        return lx - math.log(lx)
    if x < -0.25:
        return -1.0 - p - p2 / 6.0
    lx = math.log(-x)
    return lx - math.log(-lx)


def lambert_w(branch: int, x: float) -> float:
    """Solve ``w * exp(w) = x`` on branch 0 (w >= -1) or -1 (w <= -1)."""
    if branch not in (0, -1):
        raise ArgumentError("branch must be 0 or -1")
    x = float(x)
    if not math.isfinite(x):
        raise DomainError("Lambert W argument must be finite")
    if x < BRANCH_POINT:
        if x > BRANCH_POINT - 1e-15:
            x = BRANCH_POINT
        else:
            raise DomainError(f"Lambert W is not real below -1/e (got {x!r})")
    if branch == -1 and x >= 0.0:
        raise DomainError("branch -1 needs a negative argument")
    if x == 0.0:
        return 0.0
    if x == BRANCH_POINT:
        return -1.0
    p2 = _branch_distance(x)
    if p2 < _SERIES_RADIUS**2:
        # Halley cannot resolve w + 1 here: the residual is below rounding
        p = math.sqrt(max(p2, 0.0))
        return _branch_series(p if branch == 0 else -p)
    w = _initial(branch, x)
    for _ in range(MAX_ITER):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        if wp1 == 0.0:
            return w
        step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w_new = w - step
        # stay on the requested side of the branch point
        if branch == 0 and w_new < -1.0:
            w_new = 0.5 * (w - 1.0)
        elif branch == -1 and w_new > -1.0:
            w_new = 0.5 * (w - 1.0)
        if abs(w_new - w) <= 4e-16 * (1.0 + abs(w_new)):
            return w_new
        w = w_new
    if abs(w * math.exp(w) - x) <= 1e-12 * max(1.0, abs(x)):
        return w
    raise ConvergenceError("Lambert W Halley iteration", MAX_ITER, last=w)
