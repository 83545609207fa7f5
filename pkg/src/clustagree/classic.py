"""Classic pair-counting and information-theoretic agreement measures."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, log

import numpy as np
from scipy.special import gammaln

from .contingency import ContingencyTable, PairCounts
from .errors import (
    CapExceeded,
    DegenerateEntropy,
    DegeneratePrecisionRecall,
    ZeroDenominator,
)

EMI_POINT_CAP = 10**5


def _log_scale(log_base: str) -> float:
    if log_base == "natural":
        return 1.0
    if log_base == "base2":
        return 1.0 / log(2.0)
    raise ValueError(f"unknown log base {log_base!r}")


def jaccard(pc: PairCounts) -> float:
    denom = pc.m11 + pc.m10 + pc.m01
    if denom == 0:
        # no pair is co-clustered anywhere: vacuous perfect agreement
        return 1.0
    return pc.m11 / denom


def f_measure(pc: PairCounts, beta: float = 1.0) -> float:
    if beta <= 0:
        raise ValueError("beta must be positive")
    if pc.m11 + pc.m10 == 0 or pc.m11 + pc.m01 == 0:
        raise DegeneratePrecisionRecall("precision or recall denominator is zero")
    p = pc.m11 / (pc.m11 + pc.m10)
    r = pc.m11 / (pc.m11 + pc.m01)
    if p == 0 and r == 0:
        raise DegeneratePrecisionRecall("precision and recall are both zero")
    return (beta**2 + 1) * p * r / (beta**2 * p + r)


def mirkin(pc: PairCounts, n: int) -> float:
    ri = (pc.m11 + pc.m00) / pc.total
    return n * (n - 1) * (ri - 1)


def rand_index(table: ContingencyTable) -> float:
    n = table.total
    if n < 2:
        raise ZeroDenominator("Rand index needs at least two points")
    cells = table.cells
    sq = (cells.multiply(cells)).sum() if hasattr(cells, "multiply") \
        else float((cells**2).sum())
    marg = float((table.row_marginals**2).sum() + (table.col_marginals**2).sum())
    return 1.0 + (2.0 * sq - marg) / (n * n - n)


@dataclass(frozen=True)
class EntropySuite:
    h_u: float
    h_v: float
    h_uv: float
    mi: float
    vi: float


def _entropy(p: np.ndarray) -> float:
    p = p[p > 0]
    return float(-(p * np.log(p)).sum())


def entropy_suite(table: ContingencyTable, log_base: str = "natural") -> EntropySuite:
    """H(U), H(V), H(U,V), I(U,V) and VI(U,V) from a count table."""
    scale = _log_scale(log_base)
    n = table.total
    if hasattr(table.cells, "tocoo"):
        cell_vals = table.cells.tocoo().data
    else:
        cell_vals = np.asarray(table.cells).ravel()
    h_u = _entropy(table.row_marginals / n) * scale
    h_v = _entropy(table.col_marginals / n) * scale
    h_uv = _entropy(cell_vals / n) * scale
    mi = h_u + h_v - h_uv
    vi = 2 * h_uv - h_u - h_v
    return EntropySuite(h_u=h_u, h_v=h_v, h_uv=h_uv, mi=mi, vi=vi)


def nmi(table: ContingencyTable, variant: str = "sum",
        log_base: str = "natural") -> float:
    ent = entropy_suite(table, log_base)
    if ent.h_u == 0 and ent.h_v == 0:
        # both clusterings are the same trivial single cluster
        return 1.0
    if variant == "sum":
        return 2 * ent.mi / (ent.h_u + ent.h_v)
    if variant == "sqrt":
        if ent.h_u == 0 or ent.h_v == 0:
            raise DegenerateEntropy("sqrt normalization needs both entropies > 0")
        return ent.mi / np.sqrt(ent.h_u * ent.h_v)
    raise ValueError(f"unknown NMI variant {variant!r}")


def ari(table: ContingencyTable, variant: str = "exact") -> float:
    n = round(table.total)
    cells = table.dense().ravel()
    if variant == "exact":
        s_cells = sum(comb(round(x), 2) for x in cells)
        s_rows = sum(comb(round(x), 2) for x in table.row_marginals)
        s_cols = sum(comb(round(x), 2) for x in table.col_marginals)
        expected = s_rows * s_cols / comb(n, 2) if n >= 2 else 0.0
    elif variant == "approx":
        s_cells = float((cells**2).sum())
        s_rows = float((table.row_marginals**2).sum())
        s_cols = float((table.col_marginals**2).sum())
        expected = s_rows * s_cols / (n * n)
    else:
        raise ValueError(f"unknown ARI variant {variant!r}")
    numerator = s_cells - expected
    denominator = 0.5 * (s_rows + s_cols) - expected
    if denominator == 0:
        if abs(numerator) < 1e-12:
            return 1.0  # perfect degenerate agreement (e.g. two singleton clusterings)
        raise ZeroDenominator("ARI denominator is zero with nonzero numerator")
    return numerator / denominator


def emi(table: ContingencyTable, log_base: str = "natural") -> float:
    """Expected mutual information under the fixed-marginal permutation model."""
    n = round(table.total)
    if n > EMI_POINT_CAP:
        raise CapExceeded(f"EMI triple sum capped at n={EMI_POINT_CAP}")
    scale = _log_scale(log_base)
    a = np.round(table.row_marginals).astype(np.int64)
    b = np.round(table.col_marginals).astype(np.int64)
    lg = gammaln(np.arange(n + 2) + 1.0)  # log(x!) lookup
    total = 0.0
    for ai in a:
        for bj in b:
            lo = max(ai + bj - n, 1)
            hi = min(ai, bj)
            if hi < lo:
                continue
            m = np.arange(lo, hi + 1)
            log_terms = (
                lg[ai] + lg[bj] + lg[n - ai] + lg[n - bj]
                - lg[n] - lg[m] - lg[ai - m] - lg[bj - m] - lg[n - ai - bj + m]
            )
            total += float(
                ((m / n) * np.log(n * m / (ai * bj)) * np.exp(log_terms)).sum()
            )
    return total * scale


def ami(table: ContingencyTable, upper: str = "mean",
        log_base: str = "natural") -> float:
    ent = entropy_suite(table, log_base)
    if ent.h_u == 0 and ent.h_v == 0:
        raise DegenerateEntropy("AMI undefined for two trivial single clusters")
    bounds = {
        "min": min(ent.h_u, ent.h_v),
        "sqrt": np.sqrt(ent.h_u * ent.h_v),
        "mean": 0.5 * (ent.h_u + ent.h_v),
        "max": max(ent.h_u, ent.h_v),
        "joint": ent.h_uv,
    }
    if upper not in bounds:
        raise ValueError(f"unknown AMI upper bound {upper!r}")
    e = emi(table, log_base)
    denominator = bounds[upper] - e
    if denominator == 0:
        raise DegenerateEntropy("AMI denominator Max[I] - E[I] is zero")
    return (ent.mi - e) / denominator
