from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

__all__ = ["MetricCurve"]


@dataclass(frozen=True, eq=False)
class MetricCurve:
    """An ordered mapping ``x -> y`` such as P(k), k_nn(k) or Delta(k).

    ``x`` must be strictly increasing and ``y`` finite.
    """

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        x = np.array(self.x, dtype=float).ravel()
        y = np.array(self.y, dtype=float).ravel()
        if x.shape != y.shape:
            raise ValueError(f"x and y differ in length ({len(x)} vs {len(y)})")
        if len(x) > 1 and not np.all(np.diff(x) > 0):
            raise ValueError("curve x values must be strictly increasing")
        if not np.all(np.isfinite(y)):
            raise ValueError("curve y values must be finite")
        x.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_points(cls, points: Iterable[tuple[float, float]]) -> "MetricCurve":
        pts = sorted(points)
        if not pts:
            return cls(np.empty(0), np.empty(0))
        xs, ys = zip(*pts)
        return cls(np.array(xs), np.array(ys))

    @classmethod
    def from_dict(cls, mapping) -> "MetricCurve":
        return cls.from_points(mapping.items())

    def __len__(self):
        return len(self.x)

    def __iter__(self):
        return iter(self.points())

    def __eq__(self, other):
        if not isinstance(other, MetricCurve):
            return NotImplemented
        return np.array_equal(self.x, other.x) and np.array_equal(self.y, other.y)

    __hash__ = None

    def points(self) -> list[tuple[float, float]]:
        return list(zip(self.x.tolist(), self.y.tolist()))

    def as_dict(self) -> dict[float, float]:
        return dict(self.points())

    def __getitem__(self, x: float) -> float:
        i = np.searchsorted(self.x, x)
        if i == len(self.x) or self.x[i] != x:
            raise KeyError(x)
        return float(self.y[i])

    def __contains__(self, x) -> bool:
        i = np.searchsorted(self.x, x)
        return bool(i < len(self.x) and self.x[i] == x)

    def scaled(self, factor: float) -> "MetricCurve":
        return MetricCurve(self.x, self.y * factor)
