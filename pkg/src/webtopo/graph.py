"""Immutable simple-graph containers and their construction.

Both graph types keep compressed sparse row (CSR) adjacency with each
neighbour list sorted ascending, so neighbour sets can be intersected by a
linear merge.  Nodes are addressed by contiguous integer indices; the
original labels live in a side table.

Construction applies the cleaning used for crawled link data: self-loops
are dropped and duplicate links are collapsed.
"""

from __future__ import annotations

from array import array
from typing import Hashable, Iterable, Sequence

import numpy as np

__all__ = [
    "UndirectedGraph",
    "DirectedGraph",
    "build_undirected",
    "build_directed",
    "undirected_from_arrays",
    "directed_from_arrays",
    "to_undirected",
    "degree",
    "in_degree",
    "out_degree",
]

INDEX_DTYPE = np.int64


def _frozen(a):
    a = np.ascontiguousarray(a, dtype=INDEX_DTYPE)
    a.setflags(write=False)
    return a


def _csr(rows, cols, n):
    """CSR arrays for (rows, cols) pairs, columns sorted within each row."""
    order = np.lexsort((cols, rows))
    indptr = np.zeros(n + 1, dtype=INDEX_DTYPE)
    np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])
    return indptr, cols[order]


class _Labelled:
    """Shared label side table.

    ``labels is None`` means the node labels are the indices themselves.
    """

    _labels: tuple | None
    _label_index: dict | None

    def _init_labels(self, labels, n):
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError(f"got {len(labels)} labels for {n} nodes")
        self._labels = labels
        self._label_index = None

    @property
    def labels(self):
        if self._labels is None:
            return tuple(range(self.node_count))
        return self._labels

    def label_of(self, v: int) -> Hashable:
        if self._labels is None:
            return int(v)
        return self._labels[v]

    def index_of(self, label: Hashable) -> int:
        if self._labels is None:
            v = int(label)
            if not 0 <= v < self.node_count:
                raise KeyError(label)
            return v
        if self._label_index is None:
            self._label_index = {lab: i for i, lab in enumerate(self._labels)}
        return self._label_index[label]

    def _same_labels(self, other):
        if self._labels is None and other._labels is None:
            return True
        return self.labels == other.labels


class UndirectedGraph(_Labelled):
    """Simple undirected graph in CSR form.

    Parameters
    ----------
    indptr, indices : array_like
        CSR adjacency.  Every link appears in both endpoint rows and each
        row must be sorted ascending without repeats.
    labels : sequence, optional
        External node labels, one per index.

    Use :func:`build_undirected` or :func:`undirected_from_arrays` rather
    than calling the constructor directly.
    """

    def __init__(self, indptr, indices, labels: Sequence | None = None):
        self.indptr = _frozen(indptr)
        self.indices = _frozen(indices)
        self.node_count = len(self.indptr) - 1
        self.degrees = _frozen(np.diff(self.indptr))
        self.link_count = int(len(self.indices) // 2)
        self._init_labels(labels, self.node_count)

    def __repr__(self):
        return f"UndirectedGraph(N={self.node_count}, L={self.link_count})"

    def __eq__(self, other):
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return (
            np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
            and self._same_labels(other)
        )

    __hash__ = None

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    def edges(self) -> tuple[np.ndarray, np.ndarray]:
        """Index arrays ``(u, v)`` with ``u < v``, one entry per link."""
        rows = np.repeat(np.arange(self.node_count, dtype=INDEX_DTYPE), self.degrees)
        keep = rows < self.indices
        return rows[keep], self.indices[keep]

    def edge_labels(self) -> list[tuple[Hashable, Hashable]]:
        u, v = self.edges()
        return [(self.label_of(a), self.label_of(b)) for a, b in zip(u.tolist(), v.tolist())]


class DirectedGraph(_Labelled):
    """Simple directed graph holding both out- and in-adjacency in CSR form.

    Reciprocal arcs ``u->v`` and ``v->u`` are kept as two arcs.
    """

    def __init__(self, out_indptr, out_indices, in_indptr, in_indices,
                 labels: Sequence | None = None):
        self.out_indptr = _frozen(out_indptr)
        self.out_indices = _frozen(out_indices)
        self.in_indptr = _frozen(in_indptr)
        self.in_indices = _frozen(in_indices)
        self.node_count = len(self.out_indptr) - 1
        self.arc_count = int(len(self.out_indices))
        self.out_degrees = _frozen(np.diff(self.out_indptr))
        self.in_degrees = _frozen(np.diff(self.in_indptr))
        self._init_labels(labels, self.node_count)

    def __repr__(self):
        return f"DirectedGraph(N={self.node_count}, arcs={self.arc_count})"

    def __eq__(self, other):
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return (
            np.array_equal(self.out_indptr, other.out_indptr)
            and np.array_equal(self.out_indices, other.out_indices)
            and self._same_labels(other)
        )

    __hash__ = None

    def successors(self, v: int) -> np.ndarray:
        return self.out_indices[self.out_indptr[v] : self.out_indptr[v + 1]]

    def predecessors(self, v: int) -> np.ndarray:
        return self.in_indices[self.in_indptr[v] : self.in_indptr[v + 1]]

    def in_degree(self, v: int) -> int:
        return int(self.in_degrees[v])

    def out_degree(self, v: int) -> int:
        return int(self.out_degrees[v])

    def arcs(self) -> tuple[np.ndarray, np.ndarray]:
        """Index arrays ``(tail, head)``, sorted by tail then head."""
        tails = np.repeat(np.arange(self.node_count, dtype=INDEX_DTYPE), self.out_degrees)
        return tails, self.out_indices.copy()


def _intern(pairs: Iterable[tuple[Hashable, Hashable]]):
    """Map labels to indices in first-seen order, streaming over ``pairs``.

    Self-loops are skipped here, so a label seen only in a self-loop does
    not become a node.
    """
    index: dict = {}
    src = array("q")
    dst = array("q")
    for a, b in pairs:
        if a == b:
            continue
        ia = index.get(a)
        if ia is None:
            ia = index[a] = len(index)
        ib = index.get(b)
        if ib is None:
            ib = index[b] = len(index)
        src.append(ia)
        dst.append(ib)
    labels = list(index)
    return (np.frombuffer(src, dtype=np.int64) if len(src) else np.empty(0, np.int64),
            np.frombuffer(dst, dtype=np.int64) if len(dst) else np.empty(0, np.int64),
            labels)


def _as_index_arrays(src, dst, n):
    src = np.asarray(src, dtype=INDEX_DTYPE).ravel()
    dst = np.asarray(dst, dtype=INDEX_DTYPE).ravel()
    if src.shape != dst.shape:
        raise ValueError("src and dst must have the same length")
    if n is None:
        n = int(max(src.max(initial=-1), dst.max(initial=-1))) + 1
    if len(src) and (min(src.min(), dst.min()) < 0 or max(src.max(), dst.max()) >= n):
        raise ValueError(f"node index out of range [0, {n})")
    return src, dst, n


def undirected_from_arrays(src, dst, n: int | None = None,
                           labels: Sequence | None = None) -> UndirectedGraph:
    """Build a cleaned undirected graph from integer endpoint arrays.

    Self-loops are dropped and ``(u, v)`` / ``(v, u)`` / repeated pairs
    collapse to a single link.  ``n`` defaults to ``max index + 1``.
    """
    src, dst, n = _as_index_arrays(src, dst, n)
    keep = src != dst
    lo = np.minimum(src[keep], dst[keep])
    hi = np.maximum(src[keep], dst[keep])
    key = np.unique(lo * n + hi)
    lo, hi = key // n, key % n
    indptr, indices = _csr(np.concatenate([lo, hi]), np.concatenate([hi, lo]), n)
    return UndirectedGraph(indptr, indices, labels)


def directed_from_arrays(src, dst, n: int | None = None,
                         labels: Sequence | None = None) -> DirectedGraph:
    """Build a cleaned directed graph from integer tail/head arrays."""
    src, dst, n = _as_index_arrays(src, dst, n)
    keep = src != dst
    key = np.unique(src[keep] * n + dst[keep])
    tails, heads = key // n, key % n
    out_indptr = np.zeros(n + 1, dtype=INDEX_DTYPE)
    np.cumsum(np.bincount(tails, minlength=n), out=out_indptr[1:])
    in_indptr, in_indices = _csr(heads, tails, n)
    return DirectedGraph(out_indptr, heads, in_indptr, in_indices, labels)


def build_undirected(edges: Iterable[tuple[Hashable, Hashable]]) -> UndirectedGraph:
    """Build a cleaned undirected graph from labelled edges.

    Labels may be any hashable values; they are numbered in order of first
    appearance.  An empty edge list gives the empty graph.

    >>> g = build_undirected([("X", "X"), ("X", "Y"), ("Y", "X"), ("X", "Y")])
    >>> g.node_count, g.link_count
    (2, 1)
    """
    src, dst, labels = _intern(edges)
    return undirected_from_arrays(src, dst, len(labels), labels)


def build_directed(arcs: Iterable[tuple[Hashable, Hashable]]) -> DirectedGraph:
    """Build a cleaned directed graph from labelled ``(tail, head)`` arcs."""
    src, dst, labels = _intern(arcs)
    return directed_from_arrays(src, dst, len(labels), labels)


def to_undirected(g: DirectedGraph) -> UndirectedGraph:
    """Undirected projection: ``u -- v`` iff ``u->v`` or ``v->u``."""
    tails, heads = g.arcs()
    return undirected_from_arrays(tails, heads, g.node_count, g._labels)


def degree(g: UndirectedGraph, v: int) -> int:
    return g.degree(v)


def in_degree(g: DirectedGraph, v: int) -> int:
    return g.in_degree(v)


def out_degree(g: DirectedGraph, v: int) -> int:
    return g.out_degree(v)
