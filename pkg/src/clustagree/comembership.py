"""Co-membership (Gram) based measures, valid for overlapping and soft input.

All statistics come from k x k, r x r and k x r products of the membership
matrices; the n x n co-membership matrices are never materialized on the
fast paths.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .errors import NotCrisp, ZeroDenominator, ZeroNF, ZeroNorm
from .model import Clustering, ensure_comparable

_CHUNK = 4096


def _frob_sq(mat: sparse.spmatrix) -> float:
    return float(mat.multiply(mat).sum())


def _row_norms_sq(c: Clustering) -> np.ndarray:
    return np.asarray(c.matrix.multiply(c.matrix).sum(axis=1)).ravel()


def _offdiag_max(c: Clustering) -> float:
    """Largest off-diagonal entry of the co-membership matrix."""
    if c.is_disjoint_crisp:
        sizes = np.asarray((c.matrix != 0).sum(axis=0)).ravel()
        return 1.0 if sizes.max() >= 2 else 0.0
    m = c.matrix
    mt = m.T.tocsc()
    best = 0.0
    for start in range(0, c.n, _CHUNK):
        block = m[start:start + _CHUNK] @ mt
        coo = block.tocoo()
        off = coo.col != (coo.row + start)
        if np.any(off):
            best = max(best, float(coo.data[off].max()))
    return best


@dataclass(frozen=True)
class GramStats:
    """Scalars and diagonals of UU^T, VV^T and their interaction."""

    frob_u: float        # ||U^T U||_F^2 == ||UU^T||_F^2
    frob_v: float
    cross: float         # ||U^T V||_F^2 == |UU^T o VV^T|
    sum_u: float         # sum of all UU^T entries
    sum_v: float
    diag_u: np.ndarray   # per-point squared row norms
    diag_v: np.ndarray
    max_u: float         # max entry of UU^T (on the diagonal: PSD)
    max_v: float
    offdiag_max_u: float
    offdiag_max_v: float
    n: int

    # diagonal-removed counterparts
    @property
    def frob_u_off(self) -> float:
        return self.frob_u - float((self.diag_u**2).sum())

    @property
    def frob_v_off(self) -> float:
        return self.frob_v - float((self.diag_v**2).sum())

    @property
    def cross_off(self) -> float:
        return self.cross - float((self.diag_u * self.diag_v).sum())

    @property
    def sum_u_off(self) -> float:
        return self.sum_u - float(self.diag_u.sum())

    @property
    def sum_v_off(self) -> float:
        return self.sum_v - float(self.diag_v.sum())


def gram_stats(u: Clustering, v: Clustering) -> GramStats:
    ensure_comparable(u, v)
    diag_u = _row_norms_sq(u)
    diag_v = _row_norms_sq(v)
    col_u = np.asarray(u.matrix.sum(axis=0)).ravel()
    col_v = np.asarray(v.matrix.sum(axis=0)).ravel()
    return GramStats(
        frob_u=_frob_sq(u.matrix.T @ u.matrix),
        frob_v=_frob_sq(v.matrix.T @ v.matrix),
        cross=_frob_sq(u.matrix.T @ v.matrix),
        sum_u=float((col_u**2).sum()),
        sum_v=float((col_v**2).sum()),
        diag_u=diag_u,
        diag_v=diag_v,
        max_u=float(diag_u.max()),
        max_v=float(diag_v.max()),
        offdiag_max_u=_offdiag_max(u),
        offdiag_max_v=_offdiag_max(v),
        n=u.n,
    )


def delta_sq(u: Clustering, v: Clustering, variant: str = "exact",
             stats: GramStats | None = None) -> float:
    """Squared Frobenius norm of the co-membership difference UU^T - VV^T."""
    s = stats or gram_stats(u, v)
    if variant == "approx":
        return s.frob_u + s.frob_v - 2.0 * s.cross
    if variant == "exact":
        return s.frob_u_off + s.frob_v_off - 2.0 * s.cross_off
    raise ValueError(f"unknown variant {variant!r}")


def _agreement(delta: float, nf: float) -> float:
    if nf == 0:
        if abs(delta) < 1e-12:
            return 1.0
        raise ZeroNF("normalizer is zero with nonzero co-membership difference")
    return 1.0 - delta / nf


def ri_delta(u: Clustering, v: Clustering, variant: str = "exact",
             stats: GramStats | None = None) -> float:
    s = stats or gram_stats(u, v)
    d = delta_sq(u, v, variant, stats=s)
    if variant == "approx":
        nf = s.n**2 * max(s.max_u, s.max_v) ** 2
    else:
        nf = s.n * (s.n - 1) * max(s.offdiag_max_u, s.offdiag_max_v) ** 2
    return _agreement(d, nf)


def ari_delta(u: Clustering, v: Clustering, variant: str = "exact",
              stats: GramStats | None = None) -> float:
    s = stats or gram_stats(u, v)
    d = delta_sq(u, v, variant, stats=s)
    if variant == "approx":
        nf = s.frob_u + s.frob_v - 2.0 * s.sum_u * s.sum_v / s.n**2
    else:
        nf = (s.frob_u_off + s.frob_v_off
              - 2.0 * s.sum_u_off * s.sum_v_off / (s.n * (s.n - 1)))
    if abs(nf) < 1e-12:
        if abs(d) < 1e-12:
            return 1.0
        raise ZeroNF("chance-adjusted normalizer is zero with nonzero difference")
    return 1.0 - d / nf


def d_norm(u: Clustering, v: Clustering, norm: str = "plain",
           stats: GramStats | None = None) -> float:
    """Co-membership difference normalized by the two Gram norms."""
    s = stats or gram_stats(u, v)
    d = delta_sq(u, v, "approx", stats=s)
    d = max(d, 0.0)  # guard tiny negative round-off
    if norm == "squared":
        denom = s.frob_u + s.frob_v
        if denom == 0:
            raise ZeroNorm("both co-membership norms are zero")
        return d / denom
    if norm == "plain":
        denom = np.sqrt(s.frob_u) + np.sqrt(s.frob_v)
        if denom == 0:
            raise ZeroNorm("both co-membership norms are zero")
        return float(np.sqrt(d) / denom)
    raise ValueError(f"unknown norm {norm!r}")


def i_norm(u: Clustering, v: Clustering, norm: str = "plain",
           stats: GramStats | None = None) -> float:
    return 1.0 - d_norm(u, v, norm, stats=stats)


def i_sqrt_tr(u: Clustering, v: Clustering,
              stats: GramStats | None = None) -> float:
    """tr(UU^T VV^T) / sqrt(tr((UU^T)^2) tr((VV^T)^2))."""
    s = stats or gram_stats(u, v)
    denom = np.sqrt(s.frob_u * s.frob_v)
    if denom == 0:
        raise ZeroNorm("a co-membership matrix is zero")
    return float(s.cross / denom)


def _comembership_offdiag_int(c: Clustering) -> sparse.csr_matrix:
    p = (c.matrix @ c.matrix.T).tocsr()
    p.setdiag(0)
    p.eliminate_zeros()
    p.data = np.round(p.data)
    p.eliminate_zeros()
    return p


def _omega_parts(u: Clustering, v: Clustering):
    ensure_comparable(u, v)
    if not u.is_crisp or not v.is_crisp:
        raise NotCrisp("omega needs crisp memberships (weights exactly 1)")
    a = _comembership_offdiag_int(u)
    b = _comembership_offdiag_int(v)
    pairs = u.n * (u.n - 1)
    diff = (a - b).tocsr()
    diff.eliminate_zeros()
    agree = pairs - diff.nnz
    return a, b, pairs, agree


def omega(u: Clustering, v: Clustering) -> float:
    """Fraction of point pairs with identical co-membership count in U and V."""
    _, _, pairs, agree = _omega_parts(u, v)
    return agree / pairs


def adjusted_omega(u: Clustering, v: Clustering) -> float:
    a, b, pairs, agree = _omega_parts(u, v)
    w = agree / pairs

    def freq(mat):
        counts = np.bincount(mat.data.astype(np.int64), minlength=1)
        f = counts.astype(np.float64) / pairs
        f[0] = (pairs - mat.nnz) / pairs
        return f

    fa, fb = freq(a), freq(b)
    upto = min(len(fa), len(fb))
    expected = float((fa[:upto] * fb[:upto]).sum())
    if abs(1.0 - expected) < 1e-12:
        if abs(w - 1.0) < 1e-12:
            return 1.0
        raise ZeroDenominator("expected omega is 1 with imperfect agreement")
    return (w - expected) / (1.0 - expected)
