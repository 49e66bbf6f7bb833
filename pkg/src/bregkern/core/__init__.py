"""Coordinates, points, generators, automatic differentiation and base manifolds."""

from bregkern.core.autodiff import Dual, ad_gradient, ad_hessian
from bregkern.core.coords import (
    DUAL,
    ETA,
    LAMBDA,
    PRIMAL,
    THETA,
    CoordinateTag,
    DualCoordinate,
    Point,
)
from bregkern.core.generator import AutoDiffGenerator, Generator, QuadraticGenerator
from bregkern.core.manifold import (
    BregmanManifold,
    EuclideanManifold,
    atlas_convert,
    conjugate_value,
    invert_gradient,
    legendre_dual_coord,
    metric_tensor,
)

__all__ = [
    "AutoDiffGenerator",
    "BregmanManifold",
    "CoordinateTag",
    "DUAL",
    "Dual",
    "DualCoordinate",
    "ETA",
    "EuclideanManifold",
    "Generator",
    "LAMBDA",
    "PRIMAL",
    "Point",
    "QuadraticGenerator",
    "THETA",
    "ad_gradient",
    "ad_hessian",
    "atlas_convert",
    "conjugate_value",
    "invert_gradient",
    "legendre_dual_coord",
    "metric_tensor",
]
