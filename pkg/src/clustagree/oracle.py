"""Brute-force reference implementations, used only by the test suite.

Everything here materializes dense n x n structures on purpose; the point is
reference semantics, not speed. The CLI never imports this module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .contingency import PairCounts
from .errors import NotCrisp, NotDisjoint, TooLarge
from .model import Clustering, ensure_comparable

MAX_POINTS = 2000


@dataclass(frozen=True)
class OracleReport:
    measure: str
    oracle_value: float
    fast_value: float

    @property
    def difference(self) -> float:
        return abs(self.oracle_value - self.fast_value)


def _check_size(c: Clustering) -> None:
    if c.n > MAX_POINTS:
        raise TooLarge(f"oracle capped at n={MAX_POINTS}")


def _dense_comembership(c: Clustering) -> np.ndarray:
    m = np.asarray(c.matrix.todense())
    return m @ m.T


def brute_pair_counts(u: Clustering, v: Clustering) -> PairCounts:
    """Classify every point pair by co-membership in U and V."""
    ensure_comparable(u, v)
    _check_size(u)
    if not u.is_disjoint_crisp or not v.is_disjoint_crisp:
        raise NotDisjoint("pair counting oracle needs disjoint crisp input")
    lu = u.argmax_labels()
    lv = v.argmax_labels()
    iu, jv = np.triu_indices(u.n, k=1)
    same_u = lu[iu] == lu[jv]
    same_v = lv[iu] == lv[jv]
    return PairCounts(
        m11=int(np.sum(same_u & same_v)),
        m10=int(np.sum(same_u & ~same_v)),
        m01=int(np.sum(~same_u & same_v)),
        m00=int(np.sum(~same_u & ~same_v)),
    )


def dense_delta(u: Clustering, v: Clustering, variant: str = "exact") -> float:
    """Materialize both co-membership matrices and take the difference norm."""
    ensure_comparable(u, v)
    _check_size(u)
    cu = _dense_comembership(u)
    cv = _dense_comembership(v)
    if variant == "exact":
        np.fill_diagonal(cu, 0.0)
        np.fill_diagonal(cv, 0.0)
    elif variant != "approx":
        raise ValueError(f"unknown variant {variant!r}")
    return float(((cu - cv) ** 2).sum())


def brute_omega(u: Clustering, v: Clustering) -> tuple[float, float]:
    """Pairwise count-equality tally and its chance-adjusted form."""
    ensure_comparable(u, v)
    _check_size(u)
    if not u.is_crisp or not v.is_crisp:
        raise NotCrisp("omega oracle needs crisp memberships")
    cu = np.round(_dense_comembership(u)).astype(np.int64)
    cv = np.round(_dense_comembership(v)).astype(np.int64)
    iu, jv = np.triu_indices(u.n, k=1)
    counts_u = cu[iu, jv]
    counts_v = cv[iu, jv]
    pairs = len(counts_u)
    w = float(np.sum(counts_u == counts_v)) / pairs
    top = max(counts_u.max(), counts_v.max()) + 1
    fu = np.bincount(counts_u, minlength=top) / pairs
    fv = np.bincount(counts_v, minlength=top) / pairs
    expected = float((fu * fv).sum())
    if abs(1.0 - expected) < 1e-12:
        adjusted = 1.0 if abs(w - 1.0) < 1e-12 else float("nan")
    else:
        adjusted = (w - expected) / (1.0 - expected)
    return w, adjusted
