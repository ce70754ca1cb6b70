"""Third-order metrics: triangle, in/out-triangle and clustering coefficients.

The triangle coefficient of a node is the number of links among its
neighbours.  On a directed graph the in-triangle coefficient counts
unordered pairs of in-neighbours joined by an arc in either direction
(a reciprocated pair still counts once); the out-triangle coefficient is
the same over out-neighbours.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._kernels import count_triangles
from .curve import MetricCurve
from .errors import EmptyNetworkError
from .graph import DirectedGraph, UndirectedGraph

__all__ = [
    "TriangleProfile",
    "DirectedTriangleProfile",
    "triangle_coefficients",
    "clustering_coefficients",
    "directed_triangle_coefficients",
    "mean_triangle_coefficient",
    "triangle_ccdf",
    "delta_of_k_curve",
    "c_of_k_curve",
    "delta_in_curve",
    "delta_out_curve",
]


@dataclass(frozen=True)
class TriangleProfile:
    """Per-node degree and triangle coefficient.

    ``clustering`` is NaN for nodes of degree below 2.
    """

    degrees: np.ndarray
    delta: np.ndarray
    clustering: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        k = self.degrees.astype(float)
        pairs = k * (k - 1) / 2
        with np.errstate(divide="ignore", invalid="ignore"):
            c = np.where(self.degrees >= 2, self.delta / pairs, np.nan)
        object.__setattr__(self, "clustering", c)

    def clustering_exact(self, v: int) -> Fraction | None:
        k = int(self.degrees[v])
        if k < 2:
            return None
        return Fraction(int(self.delta[v]), k * (k - 1) // 2)

    @property
    def triangle_count(self) -> int:
        return int(self.delta.sum()) // 3


@dataclass(frozen=True)
class DirectedTriangleProfile:
    in_degrees: np.ndarray
    out_degrees: np.ndarray
    delta_in: np.ndarray
    delta_out: np.ndarray


def _oriented(n, lo, hi, flags, degrees):
    """Store each link once, in the row of its lower-(degree, index) endpoint."""
    rank = np.empty(n, dtype=np.int64)
    rank[np.lexsort((np.arange(n), degrees))] = np.arange(n)
    swap = rank[lo] > rank[hi]
    rows = np.where(swap, hi, lo)
    cols = np.where(swap, lo, hi)
    flags = np.where(swap, ((flags & 1) << 1) | ((flags & 2) >> 1), flags).astype(np.int8)
    order = np.lexsort((cols, rows))
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])
    return indptr, np.ascontiguousarray(cols[order]), np.ascontiguousarray(flags[order])


def _run(n, lo, hi, flags, degrees):
    indptr, indices, flags = _oriented(n, lo, hi, flags, degrees)
    delta = np.zeros(n, dtype=np.int64)
    delta_in = np.zeros(n, dtype=np.int64)
    delta_out = np.zeros(n, dtype=np.int64)
    count_triangles(indptr, indices, flags, delta, delta_in, delta_out)
    return delta, delta_in, delta_out


def triangle_coefficients(g: UndirectedGraph) -> TriangleProfile:
    """Number of triangles through every node."""
    u, v = g.edges()
    flags = np.full(len(u), 3, dtype=np.int8)
    delta, _, _ = _run(g.node_count, u, v, flags, g.degrees)
    return TriangleProfile(g.degrees, delta)


def clustering_coefficients(g: UndirectedGraph) -> TriangleProfile:
    """Same profile as :func:`triangle_coefficients`; ``C = Delta / (k(k-1)/2)``."""
    return triangle_coefficients(g)


def _undirected_with_flags(g: DirectedGraph):
    n = g.node_count
    tails, heads = g.arcs()
    lo = np.minimum(tails, heads)
    hi = np.maximum(tails, heads)
    bit = np.where(tails < heads, 1, 2).astype(np.int8)
    key = lo * n + hi
    order = np.argsort(key, kind="stable")
    key, bit = key[order], bit[order]
    if len(key) == 0:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty, np.empty(0, dtype=np.int8), np.zeros(n, dtype=np.int64)
    starts = np.flatnonzero(np.r_[True, key[1:] != key[:-1]])
    flags = np.bitwise_or.reduceat(bit, starts)
    key = key[starts]
    lo, hi = key // n, key % n
    degrees = np.bincount(lo, minlength=n) + np.bincount(hi, minlength=n)
    return lo, hi, flags, degrees


def directed_triangle_coefficients(g: DirectedGraph) -> DirectedTriangleProfile:
    """In- and out-triangle coefficients of every node."""
    lo, hi, flags, degrees = _undirected_with_flags(g)
    _, delta_in, delta_out = _run(g.node_count, lo, hi, flags, degrees)
    return DirectedTriangleProfile(g.in_degrees, g.out_degrees, delta_in, delta_out)


def mean_triangle_coefficient(g: UndirectedGraph) -> float:
    if g.node_count == 0:
        raise EmptyNetworkError()
    return float(triangle_coefficients(g).delta.sum()) / g.node_count


def _grouped_mean(keys, values, keep=None):
    if keep is not None:
        keys, values = keys[keep], values[keep]
    ks, inverse, counts = np.unique(keys, return_inverse=True, return_counts=True)
    sums = np.bincount(inverse, weights=values, minlength=len(ks))
    return MetricCurve(ks, sums / counts)


def _profile(g, profile):
    if profile is None:
        profile = triangle_coefficients(g)
    return profile


def triangle_ccdf(g: UndirectedGraph, profile: TriangleProfile | None = None) -> MetricCurve:
    """P_c(Delta): fraction of nodes whose triangle coefficient exceeds ``Delta``.

    Evaluated at 0 and at every realised triangle coefficient.
    """
    if g.node_count == 0:
        raise EmptyNetworkError()
    profile = _profile(g, profile)
    d = np.sort(profile.delta)
    xs = np.unique(np.concatenate([[0], d]))
    above = len(d) - np.searchsorted(d, xs, side="right")
    return MetricCurve(xs, above / len(d))


def delta_of_k_curve(g: UndirectedGraph, profile: TriangleProfile | None = None) -> MetricCurve:
    """Delta(k): mean triangle coefficient of ``k``-degree nodes."""
    profile = _profile(g, profile)
    return _grouped_mean(profile.degrees, profile.delta.astype(float))


def c_of_k_curve(g: UndirectedGraph, profile: TriangleProfile | None = None) -> MetricCurve:
    """C(k): mean clustering coefficient of ``k``-degree nodes, ``k >= 2`` only."""
    profile = _profile(g, profile)
    return _grouped_mean(profile.degrees, profile.clustering, profile.degrees >= 2)


def delta_in_curve(g: DirectedGraph,
                   profile: DirectedTriangleProfile | None = None) -> MetricCurve:
    """Delta_in(k_in): mean in-triangle coefficient per in-degree."""
    if profile is None:
        profile = directed_triangle_coefficients(g)
    return _grouped_mean(profile.in_degrees, profile.delta_in.astype(float))


def delta_out_curve(g: DirectedGraph,
                    profile: DirectedTriangleProfile | None = None) -> MetricCurve:
    """Delta_out(k_out): mean out-triangle coefficient per out-degree."""
    if profile is None:
        profile = directed_triangle_coefficients(g)
    return _grouped_mean(profile.out_degrees, profile.delta_out.astype(float))
