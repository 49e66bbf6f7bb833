"""Concrete application manifolds."""

import numpy as np

from bregkern.core.coords import LAMBDA, THETA
from bregkern.core.manifold import EuclideanManifold as _Euclidean
from bregkern.linalg import spd_geometric_mean
from bregkern.manifolds.categorical import (
    CategoricalManifold,
    DiscreteMixtureManifold,
    MultinomialManifold,
    categorical_to_mixture,
    mixture_to_categorical,
    smooth_histogram,
)
from bregkern.manifolds.ekl import EKL2DManifold
from bregkern.manifolds.gaussian import (
    FisherRaoGeodesic,
    GaussianManifold,
    fisher_rao_distance_uni,
    fisher_rao_geodesic,
    gaussian_kl,
)
from bregkern.manifolds.psd import PSDManifold


class EuclideanManifold(_Euclidean):
    """Self-dual flat space of ``|x|^2 / 2`` with lambda = theta."""

    def __init__(self, dimension: int = 2):
        super().__init__(dimension)
        self.register_coordinates(LAMBDA, dimension)
        self.register_conversion(LAMBDA, THETA, lambda x: np.array(x, dtype=float))
        self.register_conversion(THETA, LAMBDA, lambda x: np.array(x, dtype=float))


def manifold_from_spec(spec: str):
    """Build a manifold from a descriptor such as ``gaussian:2`` or ``multinomial:3:10``."""
    name, *args = spec.strip().lower().split(":")
    try:
        if name == "gaussian":
            return GaussianManifold(int(args[0]) if args else 1)
        if name == "categorical":
            return CategoricalManifold(int(args[0]))
        if name == "multinomial":
            return MultinomialManifold(int(args[0]), float(args[1]))
        if name == "mixture":
            return DiscreteMixtureManifold(int(args[0]))
        if name == "psd":
            return PSDManifold(int(args[0]) if args else 2)
        if name == "ekl2d":
            return EKL2DManifold()
        if name == "euclidean":
            return EuclideanManifold(int(args[0]) if args else 2)
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad manifold descriptor {spec!r}: {exc}") from None
    raise ValueError(f"unknown manifold {name!r}")


__all__ = [
    "CategoricalManifold",
    "DiscreteMixtureManifold",
    "EKL2DManifold",
    "EuclideanManifold",
    "FisherRaoGeodesic",
    "GaussianManifold",
    "MultinomialManifold",
    "PSDManifold",
    "categorical_to_mixture",
    "fisher_rao_distance_uni",
    "fisher_rao_geodesic",
    "gaussian_kl",
    "manifold_from_spec",
    "mixture_to_categorical",
    "smooth_histogram",
    "spd_geometric_mean",
]
