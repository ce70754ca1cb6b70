"""Cross-network curve averaging and log-log curve fitting.

The reference triangle-vs-degree curve observed across web sites is

    log10 f(x) = -0.3579 log10(x)^2 + 2.9432 log10(x) - 1.1907

and is held here as :data:`REFERENCE_FIT`.  The rounded power form
``0.064 * x ** (2.94 - 0.36 log10 x)`` is kept only for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .curve import MetricCurve
from .errors import FitError, TopologyError

__all__ = [
    "DEFAULT_MIN_SUPPORT",
    "CurveCollection",
    "QuadraticLogFit",
    "DivergenceReport",
    "REFERENCE_FIT",
    "average_curves",
    "min_support_count",
    "fit_quadratic_loglog",
    "eval_reference",
    "eval_reference_power_form",
    "compare_to_reference",
    "estimate_powerlaw_exponent",
]

# 12 of 18 web sites
DEFAULT_MIN_SUPPORT = Fraction(2, 3)


@dataclass(frozen=True)
class CurveCollection:
    curves: Sequence[tuple[str, MetricCurve]]
    min_support_ratio: float | Fraction = DEFAULT_MIN_SUPPORT

    def __post_init__(self):
        if not self.curves:
            raise TopologyError("empty curve collection")
        if not 0 < self.min_support_ratio <= 1:
            raise TopologyError(
                f"min_support_ratio must lie in (0, 1], got {self.min_support_ratio}"
            )


def min_support_count(ratio: float | Fraction, total: int) -> int:
    """Smallest number of supporting curves, ``ceil(ratio * total)``."""
    if isinstance(ratio, Fraction):
        return math.ceil(ratio * total)
    # absorb float noise such as 2/3 * 18 = 11.999999999999998
    return math.ceil(round(ratio * total, 9))


def average_curves(coll: CurveCollection) -> MetricCurve:
    """Mean curve over networks with enough support at each ``x``.

    At each ``x``, only curves with a positive value there count as
    support.  If ``X`` such curves exist and ``X >= ceil(ratio * total)``
    the output is their mean; otherwise ``x`` is dropped.
    """
    need = min_support_count(coll.min_support_ratio, len(coll.curves))
    values: dict[float, list[float]] = {}
    for _, curve in coll.curves:
        for x, y in curve.points():
            if y > 0:
                values.setdefault(x, []).append(y)
    points = [(x, math.fsum(ys) / len(ys)) for x, ys in values.items() if len(ys) >= need]
    return MetricCurve.from_points(points)


@dataclass(frozen=True)
class QuadraticLogFit:
    """``log10 y = a log10(x)^2 + b log10(x) + c`` over ``fit_domain``."""

    a: float
    b: float
    c: float
    fit_domain: tuple[float, float]
    residual_rms: float = 0.0

    def __post_init__(self):
        if not self.fit_domain[0] > 0:
            raise FitError(f"fit domain must start above 0, got {self.fit_domain}")

    def log10(self, x):
        lx = np.log10(_positive(x))
        return self.a * lx**2 + self.b * lx + self.c

    def __call__(self, x):
        return 10.0 ** self.log10(x)

    def to_dict(self) -> dict:
        lo, hi = self.fit_domain
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "fit_domain": [lo, None if math.isinf(hi) else hi],
            "residual_rms": self.residual_rms,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "QuadraticLogFit":
        lo, hi = d["fit_domain"]
        return cls(float(d["a"]), float(d["b"]), float(d["c"]),
                   (float(lo), math.inf if hi is None else float(hi)),
                   float(d.get("residual_rms", 0.0)))


# The fitted degree range was not published; accept any x >= 1.
REFERENCE_FIT = QuadraticLogFit(-0.3579, 2.9432, -1.1907, (1.0, math.inf))


def _positive(x):
    arr = np.asarray(x, dtype=float)
    if np.any(arr <= 0):
        raise ValueError("x must be positive")
    return arr


def fit_quadratic_loglog(curve: MetricCurve) -> QuadraticLogFit:
    """Unweighted least-squares quadratic fit in log10-log10 space.

    Points with non-positive ``x`` or ``y`` are ignored.
    """
    keep = (curve.x > 0) & (curve.y > 0)
    x, y = curve.x[keep], curve.y[keep]
    if len(x) < 3:
        raise FitError(f"need at least 3 positive points, got {len(x)}")
    if len(np.unique(x)) < 3:
        raise FitError("need at least 3 distinct x values")
    lx, ly = np.log10(x), np.log10(y)
    design = np.stack([lx**2, lx, np.ones_like(lx)], axis=1)
    coef, *_ = np.linalg.lstsq(design, ly, rcond=None)
    a, b, c = (float(v) for v in coef)
    resid = ly - design @ coef
    rms = float(np.sqrt(np.mean(resid**2)))
    return QuadraticLogFit(a, b, c, (float(x.min()), float(x.max())), rms)


def eval_reference(x: float) -> float:
    """The reference triangle coefficient at degree ``x``."""
    if not x > 0:
        raise ValueError(f"x must be positive, got {x}")
    return float(REFERENCE_FIT(x))


def eval_reference_power_form(x: float) -> float:
    """The rounded power-law form of the reference curve."""
    if not x > 0:
        raise ValueError(f"x must be positive, got {x}")
    return 0.064 * x ** (2.94 - 0.36 * math.log10(x))


@dataclass(frozen=True)
class DivergenceReport:
    rms: float
    max_abs: float
    n_compared: int
    n_zero_excluded: int
    domain: tuple[float, float]

    def to_dict(self) -> dict:
        return {
            "rms_log10": self.rms,
            "max_abs_log10": self.max_abs,
            "n_compared": self.n_compared,
            "n_zero_excluded": self.n_zero_excluded,
            "domain": list(self.domain),
        }


def compare_to_reference(curve: MetricCurve,
                         fit: QuadraticLogFit = REFERENCE_FIT) -> DivergenceReport:
    """Deviation of ``curve`` from ``fit`` in log10 units.

    Only points inside the fit's domain are used.  Points there with
    ``y <= 0`` have no logarithm; they are skipped and counted.
    """
    lo, hi = fit.fit_domain
    inside = (curve.x >= lo) & (curve.x <= hi)
    x, y = curve.x[inside], curve.y[inside]
    positive = y > 0
    n_zero = int((~positive).sum())
    x, y = x[positive], y[positive]
    if len(x) == 0:
        raise FitError("no positive curve points inside the reference domain")
    dev = np.log10(y) - fit.log10(x)
    return DivergenceReport(
        rms=float(np.sqrt(np.mean(dev**2))),
        max_abs=float(np.max(np.abs(dev))),
        n_compared=len(x),
        n_zero_excluded=n_zero,
        domain=(float(x.min()), float(x.max())),
    )


def estimate_powerlaw_exponent(curve: MetricCurve, k_min: float = 1.0,
                               k_max: float | None = None) -> float:
    """Negated slope of a log-log least-squares line over ``k_min <= x <= k_max``.

    A quick diagnostic, not a maximum-likelihood estimate.  On sampled
    degree distributions the sparse tail (degrees seen once or twice)
    flattens the slope, so bounding ``k_max`` is usually advisable.
    """
    if not k_min > 0:
        raise ValueError("k_min must be positive")
    keep = (curve.x >= k_min) & (curve.y > 0)
    if k_max is not None:
        keep &= curve.x <= k_max
    x, y = curve.x[keep], curve.y[keep]
    if len(x) < 2:
        raise FitError(f"need at least 2 points in range, got {len(x)}")
    slope, _ = np.polyfit(np.log10(x), np.log10(y), 1)
    return float(-slope)
