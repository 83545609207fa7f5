"""File formats: clustering membership files and undirected edge lists.

Clustering lines: `point_id <ws> cluster_id [<ws> weight]`, weight default 1.
Edge lines: `u <ws> v [<ws> weight]`. `#` starts a comment in both.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError, UniverseMismatch
from .model import (
    Clustering,
    Graph,
    PointUniverse,
    clustering_from_memberships,
    graph_from_edges,
)


@dataclass(frozen=True)
class ReportRow:
    pair: str
    measure: str
    variant: str
    value: float | None
    elapsed_ms: float
    error: str | None = None

    def value_text(self, sig: int = 6) -> str:
        if self.error is not None:
            return f"error: {self.error}"
        return f"{self.value:.{sig}g}"


def _strip(line: str) -> str:
    hash_pos = line.find("#")
    if hash_pos >= 0:
        line = line[:hash_pos]
    return line.strip()


def read_membership_lines(path) -> list[tuple[str, str, float]]:
    """Parse a clustering file into (point_id, cluster_id, weight) triples."""
    triples = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"{path}:{lineno}: expected "
                             f"'point cluster [weight]', got {raw!r}")
        weight = 1.0
        if len(parts) == 3:
            try:
                weight = float(parts[2])
            except ValueError:
                raise ParseError(f"{path}:{lineno}: bad weight {parts[2]!r}")
        triples.append((parts[0], parts[1], weight))
    if not triples:
        raise ParseError(f"{path}: no membership entries found")
    return triples


def clustering_from_file(path, universe: PointUniverse) -> list[tuple[str, str, float]]:
    """Parse and register all point ids into the shared universe."""
    triples = read_membership_lines(path)
    for point, _, _ in triples:
        universe.add(point)
    return triples


def _materialize(triples, universe: PointUniverse, pad_union: bool,
                 own_points: set, path) -> Clustering:
    if not pad_union:
        missing = set(universe.ids()) - own_points
        if missing:
            some = sorted(missing)[:3]
            raise UniverseMismatch(
                f"{path}: points {some} appear elsewhere but not here "
                f"(use --pad-union to align universes)")
    indexed = [(universe.index(p), c, w) for p, c, w in triples]
    return clustering_from_memberships(indexed, n=len(universe),
                                       universe=universe.ids())


def load_clusterings(paths, graph_path=None, pad_union: bool = False,
                     sum_duplicates: bool = False):
    """Load clustering files (and an optional edge list) over a joint universe.

    Returns (list of Clusterings, Graph or None).
    """
    universe = PointUniverse()
    parsed = []
    for path in paths:
        triples = clustering_from_file(path, universe)
        parsed.append((path, triples, {p for p, _, _ in triples}))
    graph = None
    raw_edges = None
    if graph_path is not None:
        raw_edges = read_edge_lines(graph_path)
        for a, b, _ in raw_edges:
            universe.add(a)
            universe.add(b)
    clusterings = [
        _materialize(triples, universe, pad_union, own, path)
        for path, triples, own in parsed
    ]
    if raw_edges is not None:
        edges = [(universe.index(a), universe.index(b), w) for a, b, w in raw_edges]
        graph = graph_from_edges(edges, n=len(universe), universe=universe.ids(),
                                 sum_duplicates=sum_duplicates)
    return clusterings, graph


def read_edge_lines(path) -> list[tuple[str, str, float]]:
    edges = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"{path}:{lineno}: expected 'u v [weight]', got {raw!r}")
        weight = 1.0
        if len(parts) == 3:
            try:
                weight = float(parts[2])
            except ValueError:
                raise ParseError(f"{path}:{lineno}: bad weight {parts[2]!r}")
        edges.append((parts[0], parts[1], weight))
    if not edges:
        raise ParseError(f"{path}: no edges found")
    return edges


def serialize_clustering(c: Clustering) -> str:
    """Inverse of the clustering file format, up to line order."""
    lines = []
    coo = c.matrix.tocoo()
    for i, j, w in zip(coo.row, coo.col, coo.data):
        point = c.universe[i] if c.universe else str(i)
        cluster = c.cluster_ids[j] if c.cluster_ids else str(j)
        if w == 1.0:
            lines.append(f"{point}\t{cluster}")
        else:
            lines.append(f"{point}\t{cluster}\t{w:.12g}")
    return "\n".join(lines) + "\n"
