"""Synthetic baseline graphs: Barabasi-Albert growth and Erdos-Renyi."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import ba_attach
from .errors import ParameterError
from .graph import UndirectedGraph, undirected_from_arrays

__all__ = [
    "BaParams",
    "ErParams",
    "generate_ba",
    "generate_er",
    "ring_edges",
    "expected_ba_links",
    "er_probability_for_degree",
]


@dataclass(frozen=True)
class BaParams:
    """Barabasi-Albert parameters.

    ``m0`` is the size of the seed ring and defaults to ``m``.
    """

    n_final: int
    m: int
    m0: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.m0 is None:
            object.__setattr__(self, "m0", self.m)
        if not (self.n_final > self.m0 >= self.m >= 1):
            raise ParameterError(
                f"BA parameters need n_final > m0 >= m >= 1, got "
                f"n_final={self.n_final}, m0={self.m0}, m={self.m}"
            )


@dataclass(frozen=True)
class ErParams:
    """Erdos-Renyi parameters: exactly one of ``p`` / ``target_links``."""

    n: int
    p: float | None = None
    target_links: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError(f"n must be non-negative, got {self.n}")
        if (self.p is None) == (self.target_links is None):
            raise ParameterError("set exactly one of p and target_links")
        if self.p is not None and not 0.0 <= self.p <= 1.0:
            raise ParameterError(f"p must lie in [0, 1], got {self.p}")
        if self.target_links is not None:
            max_links = self.n * (self.n - 1) // 2
            if not 0 <= self.target_links <= max_links:
                raise ParameterError(
                    f"target_links={self.target_links} outside [0, {max_links}] for n={self.n}"
                )


def _seed32(seed: int) -> int:
    return int(np.random.SeedSequence(seed).generate_state(1)[0])


def ring_edges(m0: int) -> tuple[np.ndarray, np.ndarray]:
    """Edges of the connected seed: no links for 1 node, one link for 2, else a cycle."""
    if m0 < 2:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    if m0 == 2:
        return np.array([0]), np.array([1])
    src = np.arange(m0)
    return src, (src + 1) % m0


def generate_ba(params: BaParams) -> UndirectedGraph:
    """Grow a Barabasi-Albert graph from a ring of ``m0`` nodes.

    Each new node links to ``m`` distinct existing nodes chosen with
    probability proportional to their current degree, giving
    ``L = links(ring) + m * (n_final - m0)``.
    """
    n, m, m0 = params.n_final, params.m, params.m0
    seed_src, seed_dst = ring_edges(m0)
    n_grow = m * (n - m0)
    endpoints = np.empty(2 * (len(seed_src) + n_grow), dtype=np.int64)
    endpoints[0 : 2 * len(seed_src) : 2] = seed_src
    endpoints[1 : 2 * len(seed_src) : 2] = seed_dst
    src = np.empty(n_grow, dtype=np.int64)
    dst = np.empty(n_grow, dtype=np.int64)
    ba_attach(n, m, m0, _seed32(params.seed), endpoints, 2 * len(seed_src), src, dst)
    return undirected_from_arrays(
        np.concatenate([seed_src, src]), np.concatenate([seed_dst, dst]), n
    )


def _pair_from_index(t):
    """Decode pair index ``t = j(j-1)/2 + i`` (``i < j``) into ``(i, j)``."""
    j = np.floor((1 + np.sqrt(1 + 8 * t.astype(float))) / 2).astype(np.int64)
    # float sqrt can be off by one at large t
    j -= (j * (j - 1) // 2) > t
    j += ((j + 1) * j // 2) <= t
    return t - j * (j - 1) // 2, j


def generate_er(params: ErParams) -> UndirectedGraph:
    """Sample G(n, p), or a uniform graph with exactly ``target_links`` links.

    G(n, p) is drawn as a binomial link count followed by a uniform choice
    of that many distinct node pairs, which has the same distribution as
    independent per-pair coin flips.
    """
    rng = np.random.default_rng(params.seed)
    n = params.n
    n_pairs = n * (n - 1) // 2
    if params.target_links is not None:
        n_links = params.target_links
    else:
        n_links = int(rng.binomial(n_pairs, params.p)) if n_pairs else 0
    if n_links == 0:
        return undirected_from_arrays([], [], n)
    t = rng.choice(n_pairs, size=n_links, replace=False)
    i, j = _pair_from_index(np.asarray(t, dtype=np.int64))
    return undirected_from_arrays(i, j, n)


def expected_ba_links(params: BaParams) -> int:
    return len(ring_edges(params.m0)[0]) + params.m * (params.n_final - params.m0)


def er_probability_for_degree(n: int, mean_degree: float) -> float:
    """Link probability giving expected average degree ``mean_degree``."""
    if n < 2:
        raise ParameterError("need at least two nodes")
    return min(1.0, mean_degree / (n - 1))

