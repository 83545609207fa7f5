"""Structure-dependent agreement for graph communities.

Either compare clusterings after projecting them onto the edge set through
the incidence matrix, or blend the clustering distance with each side's
distance from the graph structure itself.
"""

from __future__ import annotations

from scipy import sparse

from .comembership import ari_delta, d_norm, i_sqrt_tr, ri_delta
from .errors import RequiresOverlappingMeasure
from .model import Clustering, Graph, ensure_comparable, incidence

# agreement functions safe for soft/overlapping membership matrices
_DELTA_BASES = {
    "ri-delta": lambda u, v, variant, norm: ri_delta(u, v, variant),
    "ari-delta": lambda u, v, variant, norm: ari_delta(u, v, variant),
    "d-norm": lambda u, v, variant, norm: 1.0 - d_norm(u, v, norm),
    "i-sqrt-tr": lambda u, v, variant, norm: i_sqrt_tr(u, v),
}


def base_agreement(base: str, u: Clustering, v: Clustering,
                   variant: str = "exact", norm: str = "plain") -> float:
    if base not in _DELTA_BASES:
        raise RequiresOverlappingMeasure(
            f"base measure {base!r} cannot handle the overlapping matrices "
            f"produced here; choose one of {sorted(_DELTA_BASES)}")
    return _DELTA_BASES[base](u, v, variant, norm)


def _transform(c: Clustering, inc: Clustering) -> Clustering:
    # edge x cluster matrix N^T U, interpreted as a clustering of the edges
    mat = sparse.csr_matrix(inc.matrix.T @ c.matrix)
    mat.eliminate_zeros()
    return Clustering(matrix=mat)


def transformed_measure(u: Clustering, v: Clustering, graph: Graph,
                        base: str, variant: str = "exact",
                        norm: str = "plain") -> float:
    """Agreement of the incidence-transformed clusterings N^T U vs N^T V."""
    ensure_comparable(u, v)
    inc = incidence(graph)
    return base_agreement(base, _transform(u, inc), _transform(v, inc),
                          variant, norm)


def graph_agreement(u: Clustering, graph: Graph, base: str,
                    variant: str = "exact", norm: str = "plain") -> float:
    """Agreement between a clustering and the graph's edges-as-clusters view."""
    return base_agreement(base, u, incidence(graph), variant, norm)


def combined_measure(u: Clustering, v: Clustering, graph: Graph, base: str,
                     alpha: float = 0.5, variant: str = "exact",
                     norm: str = "plain") -> float:
    """Convex blend of clustering distance and structural-distance gap."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    ensure_comparable(u, v)
    d_uv = 1.0 - base_agreement(base, u, v, variant, norm)
    inc = incidence(graph)
    d_un = 1.0 - base_agreement(base, u, inc, variant, norm)
    d_vn = 1.0 - base_agreement(base, v, inc, variant, norm)
    combined = alpha * d_uv + (1.0 - alpha) * abs(d_un - d_vn)
    return 1.0 - combined
