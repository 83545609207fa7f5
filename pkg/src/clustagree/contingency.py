"""Overlap (contingency) tables and pair counts.

Three overlap kinds are supported: plain counts, degree-weighted counts and
edge overlaps. Degree/edge kinds need the underlying graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np
from scipy import sparse

from .errors import MissingGraph, NotDisjoint
from .model import Clustering, Graph, ensure_comparable

# tables above this many cells are kept sparse
DENSE_CELL_LIMIT = 10**6


@dataclass(frozen=True)
class ContingencyTable:
    """k_U x k_V overlap matrix with marginals and total."""

    cells: object  # np.ndarray when small, scipy sparse matrix above limit
    row_marginals: np.ndarray
    col_marginals: np.ndarray
    total: float

    @property
    def shape(self):
        return self.cells.shape

    def dense(self) -> np.ndarray:
        if sparse.issparse(self.cells):
            return np.asarray(self.cells.todense())
        return self.cells

    def transpose(self) -> "ContingencyTable":
        return ContingencyTable(
            cells=self.cells.T,
            row_marginals=self.col_marginals,
            col_marginals=self.row_marginals,
            total=self.total,
        )


@dataclass(frozen=True)
class PairCounts:
    """Pair tallies: co-clustered in both / first only / second only / neither."""

    m11: float
    m10: float
    m01: float
    m00: float

    @property
    def total(self) -> float:
        return self.m11 + self.m10 + self.m01 + self.m00


def _finish_table(cells) -> ContingencyTable:
    if sparse.issparse(cells):
        if cells.shape[0] * cells.shape[1] <= DENSE_CELL_LIMIT:
            cells = np.asarray(cells.todense())
    if sparse.issparse(cells):
        rows = np.asarray(cells.sum(axis=1)).ravel()
        cols = np.asarray(cells.sum(axis=0)).ravel()
    else:
        cells = np.asarray(cells, dtype=np.float64)
        rows = cells.sum(axis=1)
        cols = cells.sum(axis=0)
    return ContingencyTable(cells=cells, row_marginals=rows,
                            col_marginals=cols, total=float(rows.sum()))


def _indicator(c: Clustering) -> sparse.csr_matrix:
    ind = c.matrix.copy()
    ind.data = np.ones_like(ind.data)
    return ind


def overlap_table(u: Clustering, v: Clustering, kind: str = "count",
                  graph: Graph | None = None,
                  pair_convention: str = "unordered") -> ContingencyTable:
    """Build the overlap table of two clusterings.

    kind:
      - "count": weighted overlap U^T V (plain intersection sizes for
        crisp disjoint input);
      - "degree": each shared point weighted by its graph degree;
      - "edge": total weight of graph edges inside each cluster
        intersection ("unordered" counts each edge once, "ordered" twice).
    """
    ensure_comparable(u, v)
    if kind == "count":
        return _finish_table(u.matrix.T @ v.matrix)
    if graph is None:
        raise MissingGraph(f"overlap kind {kind!r} requires a graph")
    if graph.n != u.n:
        raise MissingGraph(
            f"graph covers {graph.n} nodes but clusterings have {u.n}")
    bu, bv = _indicator(u), _indicator(v)
    if kind == "degree":
        d = sparse.diags(graph.degrees())
        return _finish_table(bu.T @ d @ bv)
    if kind == "edge":
        us, vs, ws = zip(*graph.edges)
        us, vs = np.asarray(us), np.asarray(vs)
        ws = np.asarray(ws, dtype=np.float64)
        # edge e contributes w_e to (a, b) iff both endpoints are in a and in b
        xu = bu[us].multiply(bu[vs])  # m x k_U
        xv = bv[us].multiply(bv[vs])  # m x k_V
        if pair_convention == "ordered":
            ws = 2.0 * ws
        elif pair_convention != "unordered":
            raise ValueError(f"unknown pair convention {pair_convention!r}")
        cells = xu.T @ sparse.diags(ws) @ xv
        return _finish_table(cells)
    raise ValueError(f"unknown overlap kind {kind!r}")


def pair_counts(u: Clustering, v: Clustering) -> PairCounts:
    """Pair counts M11/M10/M01/M00 for disjoint crisp clusterings."""
    ensure_comparable(u, v)
    if not u.is_disjoint_crisp or not v.is_disjoint_crisp:
        raise NotDisjoint(
            "pair counts need disjoint crisp clusterings; "
            "use the co-membership measures for overlapping input")
    table = overlap_table(u, v, "count")
    return pair_counts_from_table(table)


def pair_counts_from_table(table: ContingencyTable) -> PairCounts:
    cells = table.dense()
    n = round(table.total)
    m11 = sum(comb(round(x), 2) for x in cells.ravel())
    m10 = sum(comb(round(x), 2) for x in table.row_marginals) - m11
    m01 = sum(comb(round(x), 2) for x in table.col_marginals) - m11
    m00 = comb(n, 2) - m11 - m10 - m01
    return PairCounts(m11=m11, m10=m10, m01=m01, m00=m00)
