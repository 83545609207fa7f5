"""Core domain types: clusterings as sparse membership matrices, graphs, universes.

A clustering is an n x k non-negative matrix; disjoint partitions, crisp
overlapping clusters and soft memberships are all special cases of it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from .errors import (
    DuplicateEntry,
    EmptyCluster,
    EmptyClustering,
    EmptyGraph,
    NegativeWeight,
    UniverseMismatch,
)

_EPS = 1e-12


class PointUniverse:
    """Bidirectional map between external point ids and dense indices."""

    def __init__(self):
        self._index: dict = {}
        self._ids: list = []

    def add(self, point_id) -> int:
        idx = self._index.get(point_id)
        if idx is None:
            idx = len(self._ids)
            self._index[point_id] = idx
            self._ids.append(point_id)
        return idx

    def index(self, point_id) -> int:
        return self._index[point_id]

    def id_of(self, idx: int):
        return self._ids[idx]

    def ids(self) -> tuple:
        return tuple(self._ids)

    def __len__(self) -> int:
        return len(self._ids)

    def __contains__(self, point_id) -> bool:
        return point_id in self._index


@dataclass(frozen=True)
class Clustering:
    """Immutable n x k membership matrix with classification flags.

    Stored entries always have weight > 0; zero memberships are absent.
    """

    matrix: sparse.csr_matrix
    universe: tuple | None = None
    cluster_ids: tuple | None = None

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def k(self) -> int:
        return self.matrix.shape[1]

    @property
    def is_crisp(self) -> bool:
        return bool(np.all(np.abs(self.matrix.data - 1.0) < _EPS))

    @property
    def is_disjoint_crisp(self) -> bool:
        row_counts = np.diff(self.matrix.indptr)
        return self.is_crisp and bool(np.all(row_counts == 1))

    def memberships_per_point(self) -> np.ndarray:
        return np.diff(self.matrix.indptr)

    def cluster_sizes(self) -> np.ndarray:
        """Sum of membership weights per cluster."""
        return np.asarray(self.matrix.sum(axis=0)).ravel()

    def argmax_labels(self) -> np.ndarray:
        """Per-point index of the strongest cluster membership."""
        dense_best = np.full(self.n, -1, dtype=np.int64)
        best_w = np.zeros(self.n)
        coo = self.matrix.tocoo()
        for i, j, w in zip(coo.row, coo.col, coo.data):
            if w > best_w[i]:
                best_w[i] = w
                dense_best[i] = j
        return dense_best


def _build(rows, cols, weights, n, k, universe=None, cluster_ids=None) -> Clustering:
    mat = sparse.csr_matrix(
        (np.asarray(weights, dtype=np.float64), (rows, cols)), shape=(n, k)
    )
    mat.sum_duplicates()
    mat.eliminate_zeros()
    col_occupied = np.asarray((mat != 0).sum(axis=0)).ravel()
    if np.any(col_occupied == 0):
        empty = int(np.argmin(col_occupied))
        raise EmptyCluster(f"cluster {empty} has no members")
    mat.sort_indices()
    return Clustering(matrix=mat, universe=universe, cluster_ids=cluster_ids)


def clustering_from_assignments(labels, universe=None) -> Clustering:
    """Build a disjoint crisp clustering from one cluster label per point.

    Cluster indices follow first-appearance order of the labels.
    """
    labels = list(labels)
    if not labels:
        raise EmptyClustering("no points given")
    order: dict = {}
    cols = []
    for lab in labels:
        if lab not in order:
            order[lab] = len(order)
        cols.append(order[lab])
    n, k = len(labels), len(order)
    return _build(
        np.arange(n), np.asarray(cols), np.ones(n), n, k,
        universe=universe, cluster_ids=tuple(order),
    )


def clustering_from_memberships(triples, n=None, universe=None) -> Clustering:
    """Build a general clustering from (point, cluster, weight) triples.

    Cluster ids may be arbitrary hashables; they are indexed in
    first-appearance order. Zero-weight triples are dropped.
    """
    triples = list(triples)
    if not triples:
        raise EmptyClustering("no membership entries given")
    order: dict = {}
    rows, cols, weights = [], [], []
    seen = set()
    for point, cluster, weight in triples:
        if weight < 0:
            raise NegativeWeight(f"weight {weight} for point {point}")
        if (point, cluster) in seen:
            raise DuplicateEntry(f"duplicate entry for ({point}, {cluster})")
        seen.add((point, cluster))
        if cluster not in order:
            order[cluster] = len(order)
        if weight == 0:
            continue
        rows.append(int(point))
        cols.append(order[cluster])
        weights.append(float(weight))
    if not rows:
        raise EmptyClustering("all membership weights are zero")
    if n is None:
        n = max(rows) + 1
    if min(rows) < 0 or max(rows) >= n:
        raise EmptyClustering(f"point index out of range [0, {n})")
    return _build(rows, cols, weights, n, len(order),
                  universe=universe, cluster_ids=tuple(order))


@dataclass(frozen=True)
class Graph:
    """Undirected weighted graph: edges stored with u < v, no self-loops."""

    n: int
    edges: tuple = field(default_factory=tuple)  # (u, v, weight) with u < v
    universe: tuple | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        d = np.zeros(self.n)
        for u, v, w in self.edges:
            d[u] += w
            d[v] += w
        return d

    def adjacency(self) -> sparse.csr_matrix:
        if not self.edges:
            return sparse.csr_matrix((self.n, self.n))
        us, vs, ws = zip(*self.edges)
        rows = np.concatenate([us, vs])
        cols = np.concatenate([vs, us])
        data = np.concatenate([ws, ws]).astype(np.float64)
        return sparse.csr_matrix((data, (rows, cols)), shape=(self.n, self.n))


def graph_from_edges(edges, n=None, universe=None, sum_duplicates=False) -> Graph:
    """Normalize an edge list into a Graph, validating weights and duplicates."""
    norm: dict = {}
    for edge in edges:
        if len(edge) == 2:
            u, v = edge
            w = 1.0
        else:
            u, v, w = edge
        u, v = int(u), int(v)
        if u == v:
            raise EmptyGraph(f"self-loop on node {u} not allowed")
        if w <= 0:
            raise NegativeWeight(f"edge ({u},{v}) has non-positive weight {w}")
        if u > v:
            u, v = v, u
        if (u, v) in norm:
            if not sum_duplicates:
                raise DuplicateEntry(f"duplicate edge ({u},{v})")
            norm[(u, v)] += float(w)
        else:
            norm[(u, v)] = float(w)
    if not norm:
        raise EmptyGraph("graph has no edges")
    if n is None:
        n = max(max(u, v) for u, v in norm) + 1
    return Graph(n=n, edges=tuple((u, v, w) for (u, v), w in norm.items()),
                 universe=universe)


def incidence(graph: Graph) -> Clustering:
    """Node x edge incidence matrix, viewed as a clustering.

    Each edge (u, v, w) becomes a two-node cluster with membership sqrt(w)
    at both endpoints.
    """
    if graph.m == 0:
        raise EmptyGraph("incidence matrix needs at least one edge")
    rows, cols, weights = [], [], []
    for e, (u, v, w) in enumerate(graph.edges):
        rows.extend((u, v))
        cols.extend((e, e))
        weights.extend((np.sqrt(w), np.sqrt(w)))
    return _build(rows, cols, weights, graph.n, graph.m, universe=graph.universe)


def ensure_comparable(u: Clustering, v: Clustering) -> None:
    """Raise UniverseMismatch unless the two clusterings share a universe."""
    if u.n != v.n:
        raise UniverseMismatch(f"point counts differ: {u.n} vs {v.n}")
    if u.universe is not None and v.universe is not None and u.universe != v.universe:
        raise UniverseMismatch("clusterings are over different point universes")
