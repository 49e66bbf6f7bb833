"""Coordinate tags and points."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from bregkern.errors import DomainError


@dataclass(frozen=True, order=True)
class CoordinateTag:
    """Name of a coordinate system. Tags compare equal iff names match."""

    name: str

    def __str__(self) -> str:
        return self.name


THETA = CoordinateTag("theta")
ETA = CoordinateTag("eta")
LAMBDA = CoordinateTag("lambda")


class DualCoordinate(enum.Enum):
    """Selector restricted to the two flat coordinate systems."""

    PRIMAL = "theta"
    DUAL = "eta"

    @property
    def tag(self) -> CoordinateTag:
        return THETA if self is DualCoordinate.PRIMAL else ETA

    @property
    def opposite(self) -> DualCoordinate:
        return DualCoordinate.DUAL if self is DualCoordinate.PRIMAL else DualCoordinate.PRIMAL

    @classmethod
    def parse(cls, value) -> DualCoordinate:
        if isinstance(value, cls):
            return value
        key = str(value).lower()
        aliases = {"theta": cls.PRIMAL, "primal": cls.PRIMAL, "eta": cls.DUAL, "dual": cls.DUAL}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown dual coordinate {value!r}") from None


PRIMAL = DualCoordinate.PRIMAL
DUAL = DualCoordinate.DUAL


def as_tag(value) -> CoordinateTag:
    if isinstance(value, CoordinateTag):
        return value
    if isinstance(value, DualCoordinate):
        return value.tag
    return CoordinateTag(str(value))


@dataclass(frozen=True, eq=False)
class Point:
    """A coordinate tag plus a flat vector of finite parameter values.

    Points carry no reference to a manifold, so the same data can be read on
    any manifold whose chart accepts it.
    """

    coords: CoordinateTag
    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        data = np.array(self.data, dtype=float).reshape(-1)
        if not np.all(np.isfinite(data)):
            bad = int(np.flatnonzero(~np.isfinite(data))[0])
            raise DomainError("point data must be finite", index=bad)
        data.setflags(write=False)
        object.__setattr__(self, "coords", as_tag(self.coords))
        object.__setattr__(self, "data", data)

    def __len__(self) -> int:
        return self.data.shape[0]

    def __repr__(self) -> str:
        values = ", ".join(f"{v:.6g}" for v in self.data)
        return f"Point({self.coords.name}; {values})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        return self.coords == other.coords and bool(np.array_equal(self.data, other.data))

    def __hash__(self) -> int:
        return hash((self.coords, self.data.tobytes()))

    def allclose(self, other: Point, rtol=1e-9, atol=1e-12) -> bool:
        return (
            self.coords == other.coords
            and self.data.shape == other.data.shape
            and bool(np.allclose(self.data, other.data, rtol=rtol, atol=atol))
        )
