"""Bregman manifolds and their atlas of coordinate conversions."""

from __future__ import annotations

from collections import deque

import numpy as np

from bregkern.core.coords import ETA, THETA, CoordinateTag, DualCoordinate, Point, as_tag
from bregkern.core.generator import Generator, QuadraticGenerator
from bregkern.errors import ConvergenceError, ConversionError, DomainError

NEWTON_MAX_ITER = 100
NEWTON_TOL = 1e-12


def invert_gradient(gen: Generator, target, x0=None, max_iter=NEWTON_MAX_ITER, tol=NEWTON_TOL):
    """Solve ``gen.gradient(x) == target`` by damped Newton iteration.

    The step is halved while the trial point leaves the domain or fails to
    reduce the residual.
    """
    target = np.asarray(target, dtype=float).reshape(-1)
    x = gen.interior_point() if x0 is None else np.asarray(x0, dtype=float).copy()
    gen.require_domain(x)
    scale = max(1.0, float(np.max(np.abs(target))))
    resid = gen.gradient(x) - target
    rnorm = float(np.max(np.abs(resid)))
    for it in range(max_iter):
        if rnorm <= tol * scale:
            return x
        try:
            step = np.linalg.solve(gen.hessian(x), resid)
        except np.linalg.LinAlgError:
            raise ConvergenceError("gradient inversion: singular Hessian", it + 1, last=x) from None
        t = 1.0
        accepted = False
        for _ in range(60):
            cand = x - t * step
            cand_norm = _trial_residual(gen, cand, target)
            if cand_norm is not None and cand_norm < rnorm:
                accepted = True
                break
            t *= 0.5
        if not accepted:
            raise ConvergenceError("gradient inversion: line search failed", it + 1, last=x)
        x = cand
        resid = gen.gradient(x) - target
        rnorm = float(np.max(np.abs(resid)))
    if rnorm <= tol * scale:
        return x
    raise ConvergenceError("gradient inversion did not converge", max_iter, last=x)


def _trial_residual(gen, cand, target):
    # None when the trial point leaves the domain or the gradient is not finite
    if not np.all(np.isfinite(cand)) or not gen.domain_check(cand):
        return None
    try:
        with np.errstate(over="ignore", invalid="ignore"):
            r = gen.gradient(cand) - target
    except (DomainError, ArithmeticError):
        return None
    if not np.all(np.isfinite(r)):
        return None
    return float(np.max(np.abs(r)))


class BregmanManifold:
    """A dually flat space induced by a primal generator F.

    The dual generator F* is optional; without it the eta -> theta map is
    obtained by Newton inversion of grad F and F* by the Legendre formula.
    Further coordinate systems can be registered with their conversions;
    conversions compose along shortest paths of the conversion graph.
    """

    name = "bregman"

    def __init__(self, theta_generator: Generator, eta_generator: Generator | None = None, dimension=None):
        dimension = theta_generator.dimension if dimension is None else int(dimension)
        if theta_generator.dimension != dimension:
            raise ValueError("generator dimension does not match manifold dimension")
        if eta_generator is not None and eta_generator.dimension != dimension:
            raise ValueError("dual generator dimension does not match manifold dimension")
        self.dimension = dimension
        self.theta_generator = theta_generator
        self.eta_generator = eta_generator
        self._lengths: dict[CoordinateTag, int] = {THETA: dimension, ETA: dimension}
        self._edges: dict[CoordinateTag, dict[CoordinateTag, object]] = {THETA: {}, ETA: {}}
        self.register_conversion(THETA, ETA, self.theta_to_eta)
        self.register_conversion(ETA, THETA, self.eta_to_theta)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dimension={self.dimension})"

    # atlas

    def register_coordinates(self, tag, length: int) -> None:
        tag = as_tag(tag)
        self._lengths[tag] = int(length)
        self._edges.setdefault(tag, {})

    def register_conversion(self, source, target, fn) -> None:
        source, target = as_tag(source), as_tag(target)
        for t in (source, target):
            if t not in self._lengths:
                raise ConversionError(source, target, f"{t} is not registered")
        self._edges[source][target] = fn

    @property
    def coordinate_tags(self) -> tuple[CoordinateTag, ...]:
        return tuple(self._lengths)

    def coordinate_length(self, tag) -> int:
        tag = as_tag(tag)
        try:
            return self._lengths[tag]
        except KeyError:
            raise ConversionError(tag, tag, f"{tag} is not registered") from None

    def conversion_path(self, source, target) -> list[CoordinateTag]:
        source, target = as_tag(source), as_tag(target)
        for t in (source, target):
            if t not in self._lengths:
                raise ConversionError(source, target, f"{t} is not registered")
        prev = {source: None}
        queue = deque([source])
        while queue:
            node = queue.popleft()
            if node == target:
                break
            for nxt in self._edges[node]:
                if nxt not in prev:
                    prev[nxt] = node
                    queue.append(nxt)
        if target not in prev:
            raise ConversionError(source, target)
        path = [target]
        while path[-1] != source:
            path.append(prev[path[-1]])
        return path[::-1]

    def check_point(self, p: Point) -> None:
        n = self.coordinate_length(p.coords)
        if len(p) != n:
            raise DomainError(f"{p.coords} point needs {n} values, got {len(p)}")

    def convert(self, p: Point, target) -> Point:
        target = as_tag(target)
        self.check_point(p)
        if p.coords == target:
            return p
        path = self.conversion_path(p.coords, target)
        data = p.data
        for a, b in zip(path, path[1:]):
            data = np.asarray(self._edges[a][b](np.array(data, dtype=float)), dtype=float)
        return Point(target, data)

    def coords(self, p: Point, target) -> np.ndarray:
        """Data of ``p`` expressed in ``target`` (a tag or a DualCoordinate)."""
        return np.array(self.convert(p, as_tag(target)).data)

    # flat coordinates

    def theta_to_eta(self, theta) -> np.ndarray:
        return self.theta_generator.gradient(theta)

    def eta_to_theta(self, eta) -> np.ndarray:
        if self.eta_generator is not None:
            return self.eta_generator.gradient(eta)
        return invert_gradient(self.theta_generator, eta)

    def generator(self, dc: DualCoordinate) -> Generator | None:
        return self.theta_generator if DualCoordinate.parse(dc) is DualCoordinate.PRIMAL else self.eta_generator

    def potential(self, dc, x) -> float:
        """Value of F (PRIMAL) or F* (DUAL) at ``x`` given in that coordinate."""
        dc = DualCoordinate.parse(dc)
        if dc is DualCoordinate.PRIMAL:
            return self.theta_generator.value(x)
        if self.eta_generator is not None:
            return self.eta_generator.value(x)
        return self.legendre_conjugate(x)

    def potential_gradient(self, dc, x) -> np.ndarray:
        dc = DualCoordinate.parse(dc)
        return self.theta_to_eta(x) if dc is DualCoordinate.PRIMAL else self.eta_to_theta(x)

    def potential_hessian(self, dc, x) -> np.ndarray:
        dc = DualCoordinate.parse(dc)
        if dc is DualCoordinate.PRIMAL:
            return self.theta_generator.hessian(x)
        if self.eta_generator is not None:
            return self.eta_generator.hessian(x)
        return np.linalg.inv(self.theta_generator.hessian(self.eta_to_theta(x)))

    def legendre_conjugate(self, eta) -> float:
        """F*(eta) = <grad F^-1(eta), eta> - F(grad F^-1(eta))."""
        eta = np.asarray(eta, dtype=float).reshape(-1)
        theta = self.eta_to_theta(eta)
        return float(np.dot(theta, eta) - self.theta_generator.value(theta))

    def to_display(self, p: Point, tag) -> np.ndarray:
        """Vector used when drawing ``p`` in ``tag`` coordinates."""
        return self.coords(p, tag)

    def from_display(self, v, tag) -> Point:
        return Point(as_tag(tag), v)


class EuclideanManifold(BregmanManifold):
    """Flat manifold of F(x) = |x|^2 / 2, where theta and eta coincide."""

    name = "euclidean"

    def __init__(self, dimension: int = 2):
        super().__init__(QuadraticGenerator(dimension), QuadraticGenerator(dimension))


def legendre_dual_coord(m: BregmanManifold, p: Point) -> Point:
    """eta = grad F(theta), tagged ``eta``."""
    theta = m.coords(p, THETA)
    return Point(ETA, m.theta_to_eta(theta))


def conjugate_value(m: BregmanManifold, eta) -> float:
    return m.legendre_conjugate(eta)


def atlas_convert(m: BregmanManifold, p: Point, target) -> Point:
    return m.convert(p, target)


def metric_tensor(m: BregmanManifold, p: Point, dc) -> np.ndarray:
    """Hessian metric at ``p``: grad^2 F(theta) for PRIMAL, grad^2 F*(eta) for DUAL."""
    dc = DualCoordinate.parse(dc)
    return m.potential_hessian(dc, m.coords(p, dc.tag))
