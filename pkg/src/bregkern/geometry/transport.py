"""Parallel transport for the two flat connections.

In its own affine coordinate a flat connection has vanishing Christoffel
symbols, so transport leaves the components unchanged. The pairing of a
theta-transported vector with an eta-transported one is preserved by the
Hessian metric.
"""

from __future__ import annotations

import numpy as np

from bregkern.core.coords import DualCoordinate, Point
from bregkern.core.manifold import BregmanManifold, metric_tensor
from bregkern.errors import DomainError


def dual_parallel_transport(m: BregmanManifold, v, frm: Point, to: Point, dc=DualCoordinate.PRIMAL) -> np.ndarray:
    """Transport tangent components ``v`` (in ``dc`` coordinates) from ``frm`` to ``to``."""
    dc = DualCoordinate.parse(dc)
    m.coords(frm, dc.tag)
    m.coords(to, dc.tag)
    v = np.array(v, dtype=float).reshape(-1)
    if v.shape[0] != m.dimension:
        raise DomainError(f"tangent vector needs {m.dimension} components")
    return v


def mixed_inner_product(m: BregmanManifold, p: Point, v_theta, w_eta) -> float:
    """``g_p(v, w)`` for v given in theta components and w in eta components."""
    w_in_theta = metric_tensor(m, p, DualCoordinate.DUAL) @ np.asarray(w_eta, dtype=float)
    return float(np.asarray(v_theta, dtype=float) @ metric_tensor(m, p, DualCoordinate.PRIMAL) @ w_in_theta)
