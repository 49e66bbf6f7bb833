"""Parametrised curves t in [0, 1] -> Point."""

from __future__ import annotations

from bregkern.core.coords import Point
from bregkern.errors import ArgumentError

DEFAULT_SAMPLES = 256


def check_parameter(t: float) -> float:
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise ArgumentError(f"curve parameter must lie in [0, 1], got {t!r}")
    return t


class Curve:
    """Base class: subclasses implement :meth:`path`."""

    def path(self, t: float) -> Point:
        raise NotImplementedError

    def __call__(self, t: float) -> Point:
        return self.path(t)

    def sample(self, n: int = DEFAULT_SAMPLES) -> list[Point]:
        """``n + 1`` points at ``t = i / n``."""
        if n < 1:
            raise ArgumentError("need at least one sampling interval")
        return [self.path(i / n) for i in range(n + 1)]
