"""First- and second-order metrics of undirected graphs.

Joint degree distribution convention: every link contributes the two
ordered endpoint pairs ``(k_u, k_v)`` and ``(k_v, k_u)``, each with weight
``1 / (2L)``.  Under this convention the marginal identity
``P(k) = (kbar / k) * sum_k' P(k, k')`` holds exactly for every ``k >= 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .curve import MetricCurve
from .errors import EmptyNetworkError, NoLinksError
from .graph import UndirectedGraph

__all__ = [
    "JointDegreeDistribution",
    "NetworkSummary",
    "degree_distribution",
    "joint_degree_distribution",
    "degree_distribution_from_joint",
    "knn_curve",
    "knn_from_joint",
    "assortative_coefficient",
    "rich_club_coefficient",
    "rich_club_curve",
    "network_summary",
]


@dataclass(frozen=True)
class JointDegreeDistribution:
    """P(k, k') over ordered link endpoint pairs; symmetric and sums to 1."""

    entries: dict[tuple[int, int], float]

    def __getitem__(self, pair):
        return self.entries.get(tuple(pair), 0.0)

    def total(self) -> float:
        return float(math.fsum(list(self.entries.values())))

    def row_sums(self) -> dict[int, float]:
        """``sum_k' P(k, k')`` for every ``k``."""
        out: dict[int, list[float]] = {}
        for (k, _), p in self.entries.items():
            out.setdefault(k, []).append(p)
        return {k: float(math.fsum(v)) for k, v in sorted(out.items())}


@dataclass(frozen=True)
class NetworkSummary:
    node_count: int
    link_count: int
    average_degree: float
    assortative_coefficient: float | None
    mean_triangle_coefficient: float

    def to_dict(self) -> dict:
        return {
            "node_count": self.node_count,
            "link_count": self.link_count,
            "average_degree": self.average_degree,
            "assortative_coefficient": self.assortative_coefficient,
            "mean_triangle_coefficient": self.mean_triangle_coefficient,
        }


def _require_nodes(g):
    if g.node_count == 0:
        raise EmptyNetworkError()


def degree_distribution(g: UndirectedGraph) -> MetricCurve:
    """P(k): fraction of nodes with degree ``k``, for every realised ``k``."""
    _require_nodes(g)
    ks, counts = np.unique(g.degrees, return_counts=True)
    return MetricCurve(ks, counts / g.node_count)


def _endpoint_degrees(g):
    u, v = g.edges()
    return g.degrees[u], g.degrees[v]


def joint_degree_distribution(g: UndirectedGraph) -> JointDegreeDistribution:
    if g.link_count == 0:
        raise NoLinksError()
    ku, kv = _endpoint_degrees(g)
    pairs = np.stack([np.concatenate([ku, kv]), np.concatenate([kv, ku])], axis=1)
    uniq, counts = np.unique(pairs, axis=0, return_counts=True)
    norm = 2 * g.link_count
    return JointDegreeDistribution(
        {(int(a), int(b)): c / norm for (a, b), c in zip(uniq.tolist(), counts.tolist())}
    )


def degree_distribution_from_joint(jdd: JointDegreeDistribution,
                                   average_degree: float) -> MetricCurve:
    """Recover P(k) for ``k >= 1`` from the joint distribution."""
    rows = jdd.row_sums()
    return MetricCurve.from_points(
        (k, average_degree / k * s) for k, s in rows.items() if k > 0
    )


def knn_from_joint(jdd: JointDegreeDistribution, pk: MetricCurve,
                   average_degree: float) -> MetricCurve:
    """Nearest-neighbour average degree as a projection of P(k, k')."""
    weighted: dict[int, list[float]] = {}
    for (k, k2), p in jdd.entries.items():
        weighted.setdefault(k, []).append(k2 * p)
    pts = []
    for k, terms in weighted.items():
        pts.append((k, average_degree * float(math.fsum(terms)) / (k * pk[k])))
    return MetricCurve.from_points(pts)


def knn_curve(g: UndirectedGraph) -> MetricCurve:
    """k_nn(k): mean degree of the neighbours of ``k``-degree nodes.

    Neighbour degrees are pooled over all link endpoints at ``k``-degree
    nodes.  Isolated nodes are skipped.
    """
    _require_nodes(g)
    deg = g.degrees
    rows = np.repeat(np.arange(g.node_count), deg)
    nbr_sum = np.bincount(rows, weights=deg[g.indices], minlength=g.node_count)
    ks, inverse, counts = np.unique(deg, return_inverse=True, return_counts=True)
    pooled = np.bincount(inverse, weights=nbr_sum, minlength=len(ks))
    keep = ks > 0
    ks, pooled, counts = ks[keep], pooled[keep], counts[keep]
    return MetricCurve(ks, pooled / (ks * counts))


def assortative_coefficient(g: UndirectedGraph) -> float | None:
    """Degree assortativity over the ``L`` links.

    Sums are accumulated as exact integers, so the only rounding is the
    final division.  Returns ``None`` when every link endpoint has the same
    degree (zero denominator), e.g. for regular graphs.
    """
    if g.link_count == 0:
        raise NoLinksError()
    s, d = _endpoint_degrees(g)
    n_links = g.link_count
    sum_sd = int(np.dot(s, d))
    sum_half = int(s.sum()) + int(d.sum())       # 2 * sum (s+d)/2
    sum_sq = int(np.dot(s, s)) + int(np.dot(d, d))  # 2 * sum (s^2+d^2)/2
    # Both terms scaled by 4 L^2.
    num = 4 * n_links * sum_sd - sum_half * sum_half
    den = 2 * n_links * sum_sq - sum_half * sum_half
    if den == 0:
        return None
    return float(Fraction(num, den))


def _rich_club_counts(g, ks):
    deg_sorted = np.sort(g.degrees)
    u, v = g.edges()
    low_end = np.sort(np.minimum(g.degrees[u], g.degrees[v]))
    n_gt = g.node_count - np.searchsorted(deg_sorted, ks, side="right")
    e_gt = g.link_count - np.searchsorted(low_end, ks, side="right")
    return n_gt, e_gt


def rich_club_coefficient(g: UndirectedGraph, k: int) -> float | None:
    """phi(k) for an arbitrary threshold ``k``; ``None`` if fewer than 2 nodes exceed it."""
    n_gt, e_gt = _rich_club_counts(g, np.array([k]))
    n, e = int(n_gt[0]), int(e_gt[0])
    if n < 2:
        return None
    return 2 * e / (n * (n - 1))


def rich_club_curve(g: UndirectedGraph) -> MetricCurve:
    """phi(k) at every realised degree ``k`` with at least two richer nodes.

    A link counts towards ``E_{>k}`` only when both endpoints have degree
    strictly greater than ``k``.
    """
    _require_nodes(g)
    ks = np.unique(g.degrees)
    n_gt, e_gt = _rich_club_counts(g, ks)
    keep = n_gt >= 2
    ks, n_gt, e_gt = ks[keep], n_gt[keep], e_gt[keep]
    return MetricCurve(ks, 2.0 * e_gt / (n_gt * (n_gt - 1.0)))


def network_summary(g: UndirectedGraph, profile=None) -> NetworkSummary:
    """Scalar profile of ``g``; ``profile`` may pass precomputed triangle counts."""
    from .triangles import triangle_coefficients

    _require_nodes(g)
    alpha = assortative_coefficient(g) if g.link_count else None
    if profile is None:
        profile = triangle_coefficients(g)
    delta = profile.delta
    return NetworkSummary(
        node_count=g.node_count,
        link_count=g.link_count,
        average_degree=2 * g.link_count / g.node_count,
        assortative_coefficient=alpha,
        mean_triangle_coefficient=float(delta.sum()) / g.node_count,
    )
