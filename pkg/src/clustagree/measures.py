"""Name-based measure dispatch shared by the CLI and batch runner."""

from __future__ import annotations

from dataclasses import dataclass

from . import classic, comembership
from .contingency import overlap_table, pair_counts
from .errors import MissingGraph, NotDisjoint, RequiresOverlappingMeasure
from .generalized import gen_distance_adjusted
from .model import Clustering, Graph
from .structure import base_agreement, combined_measure, transformed_measure

CONTINGENCY_MEASURES = (
    "ri", "ari", "ari-approx", "jaccard", "f1", "mirkin",
    "vi", "nmi-sum", "nmi-sqrt", "ami",
)
DELTA_MEASURES = ("ri-delta", "ari-delta", "d-norm", "i-sqrt-tr")
OMEGA_MEASURES = ("omega", "omega-adj")
ALL_MEASURES = CONTINGENCY_MEASURES + DELTA_MEASURES + OMEGA_MEASURES + ("gen",)

ETA_KINDS = {"count": "count", "degree": "degree", "edge": "edge"}


@dataclass(frozen=True)
class MeasureSpec:
    """Everything needed to evaluate one named measure on a clustering pair."""

    measure: str
    phi: str = "binom2"
    eta: str = "count"
    variant: str = "exact"
    structure: str = "none"
    alpha: float = 0.5
    log_base: str = "natural"
    norm: str = "plain"
    f_beta: float = 1.0
    ami_upper: str = "mean"
    pair_convention: str = "unordered"

    def variant_text(self) -> str:
        parts = []
        if self.measure in ("ri-delta", "ari-delta"):
            parts.append(self.variant)
        if self.measure == "d-norm":
            parts.append(self.norm)
        if self.measure == "gen":
            parts.append(f"phi={self.phi}")
            parts.append(f"eta={self.eta}")
        if self.measure == "ari":
            parts.append("exact")
        if self.measure == "ari-approx":
            parts.append("approx")
        if self.measure == "ami":
            parts.append(f"upper={self.ami_upper}")
        if self.structure != "none":
            parts.append(f"structure={self.structure}")
            if self.structure == "combine":
                parts.append(f"alpha={self.alpha:g}")
        return ",".join(parts)


def _require_disjoint(u: Clustering, v: Clustering, measure: str) -> None:
    if not (u.is_disjoint_crisp and v.is_disjoint_crisp):
        raise NotDisjoint(
            f"{measure} is defined for disjoint crisp clusterings; use the "
            f"delta-based measures for overlapping or soft input")


def evaluate(spec: MeasureSpec, u: Clustering, v: Clustering,
             graph: Graph | None = None) -> float:
    m = spec.measure
    if spec.structure != "none":
        if m not in DELTA_MEASURES:
            raise RequiresOverlappingMeasure(
                f"structure mode {spec.structure!r} needs a delta-family "
                f"measure, not {m!r}")
        if graph is None:
            raise MissingGraph("structure-dependent measures need --graph")
        if spec.structure == "transform":
            return transformed_measure(u, v, graph, m, spec.variant, spec.norm)
        if spec.structure == "combine":
            return combined_measure(u, v, graph, m, spec.alpha,
                                    spec.variant, spec.norm)
        raise ValueError(f"unknown structure mode {spec.structure!r}")

    if m in DELTA_MEASURES:
        return base_agreement(m, u, v, spec.variant, spec.norm)
    if m == "omega":
        return comembership.omega(u, v)
    if m == "omega-adj":
        return comembership.adjusted_omega(u, v)
    if m == "gen":
        table = overlap_table(u, v, ETA_KINDS[spec.eta], graph=graph,
                              pair_convention=spec.pair_convention)
        return 1.0 - gen_distance_adjusted(table, spec.phi)

    _require_disjoint(u, v, m)
    if m in ("jaccard", "f1", "mirkin"):
        pc = pair_counts(u, v)
        if m == "jaccard":
            return classic.jaccard(pc)
        if m == "f1":
            return classic.f_measure(pc, spec.f_beta)
        return classic.mirkin(pc, u.n)
    table = overlap_table(u, v, "count")
    if m == "ri":
        return classic.rand_index(table)
    if m == "ari":
        return classic.ari(table, "exact")
    if m == "ari-approx":
        return classic.ari(table, "approx")
    if m == "vi":
        return classic.entropy_suite(table, spec.log_base).vi
    if m == "nmi-sum":
        return classic.nmi(table, "sum", spec.log_base)
    if m == "nmi-sqrt":
        return classic.nmi(table, "sqrt", spec.log_base)
    if m == "ami":
        return classic.ami(table, spec.ami_upper, spec.log_base)
    raise ValueError(f"unknown measure {m!r}")
