"""Geodesics, bisectors, balls, parallel transport and the Lambert W function."""

from bregkern.geometry.ball import BregmanBall, EKL2DBregmanBall, EKLBallCurve, ekl_ball_curve
from bregkern.geometry.bisector import BregmanBisector, bisector
from bregkern.geometry.curve import Curve
from bregkern.geometry.geodesic import BregmanGeodesic, geodesic
from bregkern.geometry.lambertw import lambert_w
from bregkern.geometry.transport import dual_parallel_transport, mixed_inner_product

__all__ = [
    "BregmanBall",
    "BregmanBisector",
    "BregmanGeodesic",
    "Curve",
    "EKL2DBregmanBall",
    "EKLBallCurve",
    "bisector",
    "dual_parallel_transport",
    "ekl_ball_curve",
    "geodesic",
    "lambert_w",
    "mixed_inner_product",
]
