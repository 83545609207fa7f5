"""Command-line surface: compare, batch and validate."""

from __future__ import annotations

import csv
import io as _io
import json
import sys
import time
from pathlib import Path

import click
import numpy as np

from .errors import (
    ClusteringError,
    DuplicateEntry,
    EmptyCluster,
    EmptyClustering,
    EmptyGraph,
    MissingGraph,
    NegativeWeight,
    ParseError,
    UniverseMismatch,
)
from .io import ReportRow, load_clusterings
from .measures import ALL_MEASURES, MeasureSpec, evaluate

EXIT_INPUT_ERROR = 2
EXIT_DEGENERATE = 3

_INPUT_ERRORS = (ParseError, UniverseMismatch, EmptyClustering, EmptyCluster,
                 EmptyGraph, NegativeWeight, DuplicateEntry, MissingGraph,
                 FileNotFoundError, OSError)


def _emit(text: str, output: str) -> None:
    if output == "-":
        click.echo(text, nl=False)
    else:
        Path(output).write_text(text)


def _rows_to_csv(rows: list[ReportRow]) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["pair", "measure", "variant", "value", "elapsed_ms"])
    for r in rows:
        writer.writerow([r.pair, r.measure, r.variant, r.value_text(),
                         f"{r.elapsed_ms:.3f}"])
    return buf.getvalue()


def _rows_to_json(rows: list[ReportRow]) -> str:
    payload = [
        {"pair": r.pair, "measure": r.measure, "variant": r.variant,
         "value": r.value, "error": r.error, "elapsed_ms": r.elapsed_ms}
        for r in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def _measure_options(fn):
    opts = [
        click.option("--measure", "measures", multiple=True,
                     type=click.Choice(ALL_MEASURES), default=("ari",),
                     show_default=True, help="Measure(s) to compute."),
        click.option("--phi", type=click.Choice(["xlogx", "binom2", "square",
                                                 "xxm1"]),
                     default="binom2", show_default=True),
        click.option("--eta", type=click.Choice(["count", "degree", "edge"]),
                     default="count", show_default=True),
        click.option("--variant", type=click.Choice(["exact", "approx"]),
                     default="exact", show_default=True),
        click.option("--structure", type=click.Choice(["none", "transform",
                                                       "combine"]),
                     default="none", show_default=True),
        click.option("--alpha", type=float, default=0.5, show_default=True),
        click.option("--log-base", type=click.Choice(["natural", "base2"]),
                     default="natural", show_default=True),
        click.option("--norm", type=click.Choice(["plain", "squared"]),
                     default="plain", show_default=True),
        click.option("--graph", "graph_path", type=click.Path(), default=None,
                     help="Edge list for degree/edge overlaps and structure modes."),
        click.option("--pad-union", is_flag=True,
                     help="Extend both clusterings to the union universe "
                          "instead of requiring identical point sets."),
        click.option("--sum-duplicates", is_flag=True,
                     help="Sum duplicate undirected edges instead of erroring."),
        click.option("--output", default="-", show_default=True,
                     help="Output path, or '-' for stdout."),
        click.option("--format", "out_format", type=click.Choice(["csv", "json"]),
                     default="csv", show_default=True),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def _build_specs(measures, phi, eta, variant, structure, alpha, log_base, norm):
    return [
        MeasureSpec(measure=m, phi=phi, eta=eta, variant=variant,
                    structure=structure, alpha=alpha, log_base=log_base,
                    norm=norm)
        for m in measures
    ]


@click.group()
def main():
    """Clustering agreement measures for disjoint, overlapping and graph data."""


@main.command()
@click.argument("clustering_a", type=click.Path())
@click.argument("clustering_b", type=click.Path())
@_measure_options
def compare(clustering_a, clustering_b, measures, phi, eta, variant, structure,
            alpha, log_base, norm, graph_path, pad_union, sum_duplicates,
            output, out_format):
    """Compare two clustering files with the requested measures."""
    try:
        (u, v), graph = load_clusterings(
            [clustering_a, clustering_b], graph_path,
            pad_union=pad_union, sum_duplicates=sum_duplicates)
    except _INPUT_ERRORS as exc:
        click.echo(f"input error: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    pair = f"{Path(clustering_a).name} vs {Path(clustering_b).name}"
    rows = []
    for spec in _build_specs(measures, phi, eta, variant, structure, alpha,
                             log_base, norm):
        start = time.perf_counter()
        try:
            value = evaluate(spec, u, v, graph)
        except ClusteringError as exc:
            click.echo(f"measure error ({spec.measure}): {exc}", err=True)
            sys.exit(EXIT_DEGENERATE)
        elapsed = (time.perf_counter() - start) * 1000.0
        rows.append(ReportRow(pair=pair, measure=spec.measure,
                              variant=spec.variant_text(), value=value,
                              elapsed_ms=elapsed))
    text = _rows_to_csv(rows) if out_format == "csv" else _rows_to_json(rows)
    _emit(text, output)


@main.command()
@click.argument("candidate_dir", type=click.Path())
@click.argument("reference", type=click.Path())
@_measure_options
def batch(candidate_dir, reference, measures, phi, eta, variant, structure,
          alpha, log_base, norm, graph_path, pad_union, sum_duplicates,
          output, out_format):
    """Compare every clustering file in a directory against a reference."""
    directory = Path(candidate_dir)
    if not directory.is_dir():
        click.echo(f"input error: {directory} is not a directory", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    candidates = sorted(p for p in directory.iterdir() if p.is_file())
    specs = _build_specs(measures, phi, eta, variant, structure, alpha,
                         log_base, norm)
    header = ["file"] + [
        f"{s.measure}[{s.variant_text()}]" if s.variant_text() else s.measure
        for s in specs
    ]
    table_rows = []
    for path in candidates:
        cells = [path.name]
        try:
            (cand, ref), graph = load_clusterings(
                [str(path), reference], graph_path,
                pad_union=pad_union, sum_duplicates=sum_duplicates)
        except _INPUT_ERRORS as exc:
            cells.extend([f"error: {exc}"] * len(specs))
            table_rows.append(cells)
            continue
        for spec in specs:
            try:
                cells.append(f"{evaluate(spec, ref, cand, graph):.6g}")
            except ClusteringError as exc:
                cells.append(f"error: {exc}")
        table_rows.append(cells)
    if out_format == "json":
        payload = [dict(zip(header, row)) for row in table_rows]
        _emit(json.dumps(payload, indent=2) + "\n", output)
    else:
        buf = _io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(table_rows)
        _emit(buf.getvalue(), output)


@main.command()
@click.argument("clustering", type=click.Path())
@click.option("--graph", "graph_path", type=click.Path(), default=None)
@click.option("--pad-union", is_flag=True)
def validate(clustering, graph_path, pad_union):
    """Report size, classification and coverage diagnostics for one file."""
    try:
        (c,), graph = load_clusterings([clustering], graph_path,
                                       pad_union=pad_union)
    except _INPUT_ERRORS as exc:
        click.echo(f"input error: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    per_point = c.memberships_per_point()
    if c.is_disjoint_crisp:
        kind = "disjoint-crisp"
    elif c.is_crisp:
        kind = "crisp"
    else:
        kind = "soft"
    overlapping = int(np.sum(per_point > 1))
    uncovered = int(np.sum(per_point == 0))
    click.echo(f"classification: {kind}")
    click.echo(f"points: {c.n}")
    click.echo(f"clusters: {c.k}")
    if overlapping:
        click.echo(f"overlap: {overlapping} point(s) in more than one cluster "
                   f"(max {int(per_point.max())})")
    else:
        click.echo("overlap: none")
    if uncovered:
        click.echo(f"coverage gaps: {uncovered} point(s) in no cluster")
    else:
        click.echo("coverage gaps: none")
    if graph is not None:
        click.echo(f"graph: {graph.n} nodes, {graph.m} edges")


if __name__ == "__main__":
    main()
