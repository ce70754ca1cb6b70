from collections import deque

import numpy as np
import pytest

from webtopo.aggregate import estimate_powerlaw_exponent
from webtopo.connectivity import degree_distribution
from webtopo.errors import ParameterError
from webtopo.generators import (
    BaParams,
    ErParams,
    _pair_from_index,
    er_probability_for_degree,
    expected_ba_links,
    generate_ba,
    generate_er,
)


def _connected(g):
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v).tolist():
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.node_count


@pytest.fixture(scope="module")
def ba10k():
    return generate_ba(BaParams(10_000, 3, seed=1))


def test_ba_size(ba10k):
    assert ba10k.node_count == 10_000
    assert ba10k.link_count == 3 + 3 * 9997 == 29_994
    assert 2 * ba10k.link_count / ba10k.node_count == pytest.approx(6.0, abs=0.01)


def test_ba_smallest_case():
    g = generate_ba(BaParams(2, 1, m0=1))
    assert (g.node_count, g.link_count) == (2, 1)


@pytest.mark.parametrize("n,m,m0", [(50, 1, 1), (50, 2, 2), (200, 3, 5), (300, 4, 4)])
def test_ba_link_formula_connectivity_and_min_degree(n, m, m0):
    params = BaParams(n, m, m0, seed=9)
    g = generate_ba(params)
    assert g.link_count == expected_ba_links(params)
    assert _connected(g)
    assert np.all(g.degrees[m0:] >= m)


def test_ba_min_degree_large(ba10k):
    assert ba10k.degrees.min() >= 3


def test_ba_deterministic():
    a = generate_ba(BaParams(2000, 3, seed=42))
    b = generate_ba(BaParams(2000, 3, seed=42))
    c = generate_ba(BaParams(2000, 3, seed=43))
    assert a == b
    assert a != c


def test_ba_power_law_tail(ba10k):
    gamma = estimate_powerlaw_exponent(degree_distribution(ba10k), k_min=3, k_max=30)
    assert 2.5 <= gamma <= 3.5


@pytest.mark.parametrize("kwargs", [
    dict(n_final=3, m=3),            # n_final must exceed m0
    dict(n_final=10, m=0),
    dict(n_final=10, m=3, m0=2),     # m0 < m
])
def test_ba_invalid(kwargs):
    with pytest.raises(ParameterError):
        BaParams(**kwargs)


def test_er_extremes():
    assert generate_er(ErParams(10, p=0.0)).link_count == 0
    k10 = generate_er(ErParams(10, p=1.0))
    assert k10.link_count == 45
    assert np.all(k10.degrees == 9)


def test_er_mean_degree():
    n = 5000
    g = generate_er(ErParams(n, p=er_probability_for_degree(n, 6), seed=0))
    assert 2 * g.link_count / n == pytest.approx(6, rel=0.05)


def test_er_exact_links_and_determinism():
    a = generate_er(ErParams(300, target_links=1234, seed=5))
    assert a.link_count == 1234
    assert a == generate_er(ErParams(300, target_links=1234, seed=5))


def test_er_invalid():
    with pytest.raises(ParameterError):
        ErParams(10, target_links=46)
    with pytest.raises(ParameterError):
        ErParams(10, p=0.1, target_links=3)
    with pytest.raises(ParameterError):
        ErParams(10, p=1.5)


def test_pair_index_decoding_is_bijective():
    n = 200
    t = np.arange(n * (n - 1) // 2)
    i, j = _pair_from_index(t)
    assert np.all(i < j) and np.all(j < n)
    assert len(set(zip(i.tolist(), j.tolist()))) == len(t)
    big = np.array([10**12, 10**12 + 1, 4 * 10**13])
    i, j = _pair_from_index(big)
    assert np.all(j * (j - 1) // 2 + i == big) and np.all((0 <= i) & (i < j))


def test_er_pair_frequencies_uniform():
    # every pair of a 6-node graph should be hit about equally often
    counts = np.zeros((6, 6))
    for seed in range(400):
        g = generate_er(ErParams(6, target_links=3, seed=seed))
        u, v = g.edges()
        counts[u, v] += 1
    hits = counts[np.triu_indices(6, 1)]
    assert hits.sum() == 1200
    assert hits.min() > 40 and hits.max() < 125
