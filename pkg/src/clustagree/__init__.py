"""Clustering agreement and distance measures.

Covers classic pair-counting and information-theoretic indices, a
generalized distance family over pluggable overlap and scalar functions,
co-membership formulations that stay valid for overlapping and soft
clusterings, and structure-dependent variants for graph communities.
"""

from .classic import (
    EntropySuite,
    ami,
    ari,
    emi,
    entropy_suite,
    f_measure,
    jaccard,
    mirkin,
    nmi,
    rand_index,
)
from .comembership import (
    GramStats,
    adjusted_omega,
    ari_delta,
    d_norm,
    delta_sq,
    gram_stats,
    i_norm,
    i_sqrt_tr,
    omega,
    ri_delta,
)
from .contingency import ContingencyTable, PairCounts, overlap_table, pair_counts
from .generalized import (
    PHI_CATALOG,
    GeneralizedResult,
    Phi,
    custom_phi,
    gen_distance,
    gen_distance_adjusted,
    gen_distance_matrix_form,
    gen_distance_normalized,
)
from .measures import ALL_MEASURES, MeasureSpec, evaluate
from .model import (
    Clustering,
    Graph,
    PointUniverse,
    clustering_from_assignments,
    clustering_from_memberships,
    ensure_comparable,
    graph_from_edges,
    incidence,
)
from .structure import combined_measure, graph_agreement, transformed_measure

__all__ = [
    "ALL_MEASURES",
    "Clustering",
    "ContingencyTable",
    "EntropySuite",
    "GeneralizedResult",
    "GramStats",
    "Graph",
    "MeasureSpec",
    "PHI_CATALOG",
    "PairCounts",
    "Phi",
    "PointUniverse",
    "adjusted_omega",
    "ami",
    "ari",
    "ari_delta",
    "clustering_from_assignments",
    "clustering_from_memberships",
    "combined_measure",
    "custom_phi",
    "d_norm",
    "delta_sq",
    "emi",
    "ensure_comparable",
    "entropy_suite",
    "evaluate",
    "f_measure",
    "gen_distance",
    "gen_distance_adjusted",
    "gen_distance_matrix_form",
    "gen_distance_normalized",
    "graph_agreement",
    "graph_from_edges",
    "gram_stats",
    "i_norm",
    "i_sqrt_tr",
    "incidence",
    "jaccard",
    "mirkin",
    "nmi",
    "omega",
    "overlap_table",
    "pair_counts",
    "rand_index",
    "ri_delta",
    "transformed_measure",
]
