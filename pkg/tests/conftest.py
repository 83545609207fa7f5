"""Shared fixtures: small worked examples plus random clustering generators."""

from pathlib import Path

import numpy as np
import pytest

from clustagree import clustering_from_assignments, clustering_from_memberships
from clustagree.io import load_clusterings

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def small_pair():
    """10-point disjoint pair behind the contingency [[3,0,3],[1,3,0]]."""
    (u, v), _ = load_clusterings(
        [FIXTURES / "small_A.clu", FIXTURES / "small_B.clu"])
    return u, v


@pytest.fixture(scope="session")
def hub_case():
    """The 9-node/15-edge example graph with its three partitions.

    Returns (ground_truth, candidate1, candidate2, graph); candidate1 moves
    a low-degree node out of the big community, candidate2 moves the hub.
    """
    (u, v1, v2), g = load_clusterings(
        [FIXTURES / "hub_truth.clu", FIXTURES / "hub_cand_leaf.clu",
         FIXTURES / "hub_cand_hub.clu"],
        FIXTURES / "hub.edges")
    return u, v1, v2, g


@pytest.fixture(scope="session")
def overlap_trio():
    """Crisp-overlapping, soft and free-weight variants of one clustering."""
    (v, u1, u2), _ = load_clusterings(
        [FIXTURES / "overlap_crisp.clu", FIXTURES / "overlap_soft.clu",
         FIXTURES / "overlap_weighted.clu"])
    return v, u1, u2


def random_disjoint(rng: np.random.Generator, n_max: int = 60):
    n = int(rng.integers(5, n_max + 1))
    k = int(rng.integers(1, min(6, n) + 1))
    return clustering_from_assignments(rng.integers(0, k, n).tolist())


def random_crisp_overlapping(rng: np.random.Generator, n_max: int = 60,
                             max_memberships: int = 2):
    n = int(rng.integers(5, n_max + 1))
    k = int(rng.integers(2, 7))
    triples = []
    for i in range(n):
        count = int(rng.integers(1, max_memberships + 1))
        for c in rng.choice(k, size=min(count, k), replace=False):
            triples.append((i, int(c), 1.0))
    return clustering_from_memberships(triples, n=n)


def random_soft(rng: np.random.Generator, n_max: int = 60):
    n = int(rng.integers(5, n_max + 1))
    k = int(rng.integers(2, 7))
    triples = []
    for i in range(n):
        count = int(rng.integers(1, 4))
        for c in rng.choice(k, size=min(count, k), replace=False):
            triples.append((i, int(c), float(rng.uniform(0.05, 1.0))))
    return clustering_from_memberships(triples, n=n)


def random_disjoint_pair(rng: np.random.Generator, n_max: int = 60):
    u = random_disjoint(rng, n_max)
    k = int(rng.integers(1, 7))
    v = clustering_from_assignments(rng.integers(0, k, u.n).tolist())
    return u, v
