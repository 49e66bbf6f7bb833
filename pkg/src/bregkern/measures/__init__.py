"""Divergences, Chernoff information, barycenters and the AHM iteration."""

from bregkern.measures.ahm import inductive_midpoint_mean
from bregkern.measures.barycenter import (
    Barycenter,
    DualBarycenter,
    SkewBurbeaRaoBarycenter,
    dual_barycenter,
    skew_burbea_rao_barycenter,
    skew_burbea_rao_objective,
)
from bregkern.measures.chernoff import (
    ChernoffInformation,
    chernoff_information,
    chernoff_point,
    equidistance_residual,
)
from bregkern.measures.divergence import (
    BhattacharyyaDistance,
    BregmanDivergence,
    Dissimilarity,
    FenchelYoungDivergence,
    SkewJensenDivergence,
    bhattacharyya_distance,
    bregman_divergence,
    fenchel_young_divergence,
    skew_jensen_divergence,
)

__all__ = [
    "Barycenter",
    "BhattacharyyaDistance",
    "BregmanDivergence",
    "ChernoffInformation",
    "Dissimilarity",
    "DualBarycenter",
    "FenchelYoungDivergence",
    "SkewBurbeaRaoBarycenter",
    "SkewJensenDivergence",
    "bhattacharyya_distance",
    "bregman_divergence",
    "chernoff_information",
    "chernoff_point",
    "dual_barycenter",
    "equidistance_residual",
    "fenchel_young_divergence",
    "inductive_midpoint_mean",
    "skew_burbea_rao_barycenter",
    "skew_burbea_rao_objective",
    "skew_jensen_divergence",
]
