"""Drawable scenes: points, sampled curves and metric ellipses in a 2D projection."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from bregkern.core.coords import THETA, CoordinateTag, DualCoordinate, Point, as_tag
from bregkern.core.manifold import BregmanManifold, metric_tensor
from bregkern.errors import ArgumentError, DomainError
from bregkern.geometry.curve import DEFAULT_SAMPLES, Curve

TISSOT_SAMPLES = 64
FD_STEP = 1e-6


@dataclass
class Style:
    color: str = "black"
    opacity: float = 1.0
    label: str | None = None


@dataclass
class DrawnPoint:
    xy: np.ndarray
    style: Style


@dataclass
class DrawnPolyline:
    xy: np.ndarray  # shape (n, 2)
    style: Style
    kind: str = "curve"


@dataclass
class TissotEllipse:
    """Ellipse ``{v : (v - c)^T G (v - c) = scale^2}`` depicting the metric at a point."""

    center: np.ndarray
    shape: np.ndarray
    scale: float = 1.0
    style: Style = field(default_factory=Style)

    def boundary(self, n: int = TISSOT_SAMPLES) -> np.ndarray:
        low = np.linalg.cholesky(self.shape)
        angles = 2.0 * math.pi * np.arange(n) / n
        unit = np.stack([np.cos(angles), np.sin(angles)])
        offsets = np.linalg.solve(low.T, unit).T * self.scale
        return self.center + offsets


def display_jacobian(m: BregmanManifold, p: Point, display: CoordinateTag) -> np.ndarray:
    """Derivative of the display vector with respect to theta, shape (n_display, dimension)."""
    theta = m.coords(p, THETA)
    if np.array_equal(m.to_display(p, display), m.coords(p, display)):
        if display == THETA:
            return np.eye(m.dimension)
        if display == DualCoordinate.DUAL.tag:
            return metric_tensor(m, p, DualCoordinate.PRIMAL)
    # central differences in theta, whose domain is open around p
    cols = []
    for k in range(m.dimension):
        h = FD_STEP * max(1.0, abs(theta[k]))
        plus, minus = theta.copy(), theta.copy()
        plus[k] += h
        minus[k] -= h
        up = m.to_display(Point(THETA, plus), display)
        down = m.to_display(Point(THETA, minus), display)
        cols.append((np.asarray(up, dtype=float) - np.asarray(down, dtype=float)) / (2 * h))
    return np.stack(cols, axis=1)


def display_metric(m: BregmanManifold, p: Point, display: CoordinateTag) -> np.ndarray:
    """Hessian metric in display coordinates; needs a display chart of the manifold's dimension."""
    jac = display_jacobian(m, p, display)
    if jac.shape[0] != jac.shape[1]:
        raise DomainError(f"{display} display has {jac.shape[0]} values for a {m.dimension}-dimensional manifold")
    inv = np.linalg.inv(jac)
    g = inv.T @ metric_tensor(m, p, DualCoordinate.PRIMAL) @ inv
    return 0.5 * (g + g.T)


def tissot_shape(m: BregmanManifold, p: Point, display: CoordinateTag, index) -> np.ndarray:
    """Shape matrix of the projected image of the unit metric ball at ``p``.

    With ``A`` the display Jacobian rows at ``index`` the image of
    ``{u : u^T G u <= 1}`` is ``{v : v^T (A G^-1 A^T)^-1 v <= 1}``. For a
    two-dimensional manifold this is the display metric itself.
    """
    i, j = index
    a = display_jacobian(m, p, display)[[i, j], :]
    g = metric_tensor(m, p, DualCoordinate.PRIMAL)
    cov = a @ np.linalg.solve(g, a.T)
    shape = np.linalg.inv(0.5 * (cov + cov.T))
    return 0.5 * (shape + shape.T)


class Scene:
    """A 2D projection of manifold objects, drawn in ``display`` coordinates."""

    def __init__(self, manifold: BregmanManifold | None = None, display=THETA, index=(0, 1), title="", axis_labels=("", "")):
        self.manifold = manifold
        self.display = as_tag(display)
        self.index = tuple(int(i) for i in index)
        if len(self.index) != 2:
            raise ArgumentError("projection needs exactly two indices")
        self.title = title
        self.axis_labels = tuple(axis_labels)
        self.points: list[DrawnPoint] = []
        self.polylines: list[DrawnPolyline] = []
        self.ellipses: list[TissotEllipse] = []

    def project(self, p) -> np.ndarray:
        if isinstance(p, Point):
            if self.manifold is None:
                v = p.data
            else:
                v = self.manifold.to_display(p, self.display)
        else:
            v = np.asarray(p, dtype=float)
        if v.shape[0] <= max(self.index):
            raise DomainError(f"cannot project {v.shape[0]} values onto indices {self.index}")
        return np.array([v[self.index[0]], v[self.index[1]]], dtype=float)

    def add_point(self, p, color="black", opacity=1.0, label=None) -> None:
        self.points.append(DrawnPoint(self.project(p), Style(color, opacity, label)))

    def add_polyline(self, pts, color="black", opacity=1.0, label=None, kind="curve") -> None:
        xy = np.array([self.project(p) for p in pts], dtype=float)
        self.polylines.append(DrawnPolyline(xy, Style(color, opacity, label), kind))

    def add_curve(self, curve: Curve, color="black", opacity=1.0, label=None, kind="curve", samples=DEFAULT_SAMPLES) -> None:
        self.add_polyline(curve.sample(samples), color, opacity, label, kind)

    def add_tissot(self, p: Point, scale=1.0, color="grey", opacity=0.5, label=None) -> TissotEllipse:
        if self.manifold is None:
            raise ArgumentError("Tissot ellipses need a manifold")
        shape = tissot_shape(self.manifold, p, self.display, self.index)
        ellipse = TissotEllipse(self.project(p), shape, float(scale), Style(color, opacity, label))
        self.ellipses.append(ellipse)
        return ellipse

    def bounds(self):
        chunks = [d.xy.reshape(1, 2) for d in self.points]
        chunks += [d.xy for d in self.polylines if len(d.xy)]
        chunks += [e.boundary() for e in self.ellipses]
        if not chunks:
            return np.array([-1.0, -1.0]), np.array([1.0, 1.0])
        allxy = np.vstack(chunks)
        return allxy.min(axis=0), allxy.max(axis=0)
