"""Bregman manifolds: dual coordinates, divergences, geodesics and barycenters."""

from bregkern.core import (
    ETA,
    LAMBDA,
    THETA,
    AutoDiffGenerator,
    BregmanManifold,
    CoordinateTag,
    DualCoordinate,
    Generator,
    Point,
)
from bregkern.errors import (
    ArgumentError,
    BregkernError,
    ConvergenceError,
    ConversionError,
    DegenerateError,
    DomainError,
    InputError,
)

__all__ = [
    "ETA",
    "LAMBDA",
    "THETA",
    "ArgumentError",
    "AutoDiffGenerator",
    "BregkernError",
    "BregmanManifold",
    "ConvergenceError",
    "ConversionError",
    "CoordinateTag",
    "DegenerateError",
    "DomainError",
    "DualCoordinate",
    "Generator",
    "InputError",
    "Point",
]
