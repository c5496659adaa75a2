"""Command-line entry points: cluster, decision-graph, eval, serve, synth."""

import sys
import time
from pathlib import Path
from typing import Optional

import click
import numpy as np

from . import datasets as synth_datasets
from . import pipeline
from .dataset import DcSpec, load_points
from .density import compute_profile, decision_graph
from .evaluate import evaluate_labels
from .merge import Termination


def parse_dc(dc: str, dc_mode: str) -> DcSpec:
    """'5%' -> percentage spec under dc_mode; plain number -> absolute."""
    dc = dc.strip()
    if dc.endswith("%"):
        mode = {"max-rho": "max-rho-percent", "avg-neighbor": "avg-neighbor-percent"}[dc_mode]
        return DcSpec(mode=mode, value=float(dc[:-1]))
    return DcSpec(mode="absolute", value=float(dc))


def build_termination(clusters: Optional[int], t_ri: Optional[float], t_rc: Optional[float]) -> Termination:
    if clusters is not None:
        return Termination.target_count(clusters)
    if t_ri is not None or t_rc is not None:
        return Termination.thresholds(t_ri or 0.0, t_rc or 0.0)
    raise click.UsageError("specify --clusters or thresholds --t-ri/--t-rc")


def _input_options(fn):
    fn = click.option("--input", "input_path", required=True, type=click.Path(exists=True))(fn)
    fn = click.option("--header", is_flag=True, help="skip the first row")(fn)
    fn = click.option("--label-column", type=int, default=None, help="0-based truth label column")(fn)
    return fn


@click.group()
def main():
    """Density-peak clustering with mutual-kNN agglomerative merging."""


@main.command()
@_input_options
@click.option("--dc", default="2%", show_default=True, help="cutoff: 'N%' or absolute length")
@click.option("--dc-mode", type=click.Choice(["max-rho", "avg-neighbor"]), default="max-rho", show_default=True)
@click.option("--k-neighbors", type=int, default=10, show_default=True)
@click.option("--beta", type=float, default=2.0, show_default=True)
@click.option("--clusters", type=int, default=None, help="target final cluster count")
@click.option("--t-ri", type=float, default=None, help="RI threshold termination")
@click.option("--t-rc", type=float, default=None, help="RC threshold termination")
@click.option("--centers", default=None, help="comma-separated explicit center indices")
@click.option("--initial-centers", type=int, default=None, help="auto center count for phase I")
@click.option("--out-labels", type=click.Path(), default=None)
@click.option("--out-trace", type=click.Path(), default=None)
@click.option("--out-decision-graph", type=click.Path(), default=None)
def cluster(input_path, header, label_column, dc, dc_mode, k_neighbors, beta,
            clusters, t_ri, t_rc, centers, initial_centers,
            out_labels, out_trace, out_decision_graph):
    """Run the full two-phase pipeline on a point file."""
    ps = load_points(input_path, label_column=label_column, header=header)
    term = build_termination(clusters, t_ri, t_rc)
    center_list = None
    if centers:
        center_list = [int(c) for c in centers.split(",")]
    t0 = time.perf_counter()
    result = pipeline.run(
        ps,
        parse_dc(dc, dc_mode),
        n_neighbor=k_neighbors,
        beta=beta,
        termination=term,
        centers=center_list,
        initial_centers=initial_centers,
    )
    wall = time.perf_counter() - t0
    if out_labels:
        Path(out_labels).write_text("\n".join(str(int(x)) for x in result.final.label) + "\n")
    if out_trace:
        Path(out_trace).write_text(result.trace.to_json())
    if out_decision_graph:
        Path(out_decision_graph).write_text(result.graph_data.to_json())
    click.echo(f"n={ps.n} dc={result.dc:.6g} initial_clusters={result.phase1.m} "
               f"final_clusters={result.final.m} merges={len(result.trace.steps)}")
    phases = " ".join(f"{k}={v:.3f}s" for k, v in result.timings.items())
    click.echo(f"time total={wall:.3f}s {phases}")
    if ps.truth_labels is not None:
        report = evaluate_labels(result.final.label, ps.truth_labels)
        click.echo(f"accuracy={report.accuracy:.4f} ari={report.ari:.4f}")


@main.command("decision-graph")
@_input_options
@click.option("--dc", default="2%", show_default=True)
@click.option("--dc-mode", type=click.Choice(["max-rho", "avg-neighbor"]), default="max-rho", show_default=True)
@click.option("--out", "out_path", type=click.Path(), default=None, help="write JSON here instead of stdout")
def decision_graph_cmd(input_path, header, label_column, dc, dc_mode, out_path):
    """Export per-point (rho, delta, gamma) records, sorted by gamma."""
    from .dataset import pairwise_distance, resolve_dc

    ps = load_points(input_path, label_column=label_column, header=header)
    dm = pairwise_distance(ps)
    dc_abs = resolve_dc(dm, parse_dc(dc, dc_mode))
    profile = compute_profile(dm, dc_abs)
    payload = decision_graph(profile.rho, profile.delta).to_json()
    if out_path:
        Path(out_path).write_text(payload)
    else:
        click.echo(payload)


@main.command("eval")
@click.option("--labels", "labels_path", required=True, type=click.Path(exists=True))
@click.option("--truth", "truth_path", type=click.Path(exists=True), default=None,
              help="file of truth labels, one per line")
@click.option("--input", "input_path", type=click.Path(exists=True), default=None,
              help="point file carrying the truth labels")
@click.option("--label-column", type=int, default=None)
@click.option("--header", is_flag=True)
def eval_cmd(labels_path, truth_path, input_path, label_column, header):
    """Score a label file against ground truth (best-permutation accuracy, ARI)."""
    pred = np.loadtxt(labels_path, dtype=np.int64, ndmin=1)
    if truth_path:
        truth = np.loadtxt(truth_path, dtype=np.int64, ndmin=1)
    elif input_path is not None and label_column is not None:
        truth = load_points(input_path, label_column=label_column, header=header).truth_labels
    else:
        raise click.UsageError("provide --truth or --input with --label-column")
    if len(pred) != len(truth):
        raise click.ClickException(
            f"length mismatch: {len(pred)} predicted vs {len(truth)} truth labels"
        )
    click.echo(evaluate_labels(pred, truth).to_json())


@main.command()
@_input_options
@click.option("--dc", default="2%", show_default=True)
@click.option("--dc-mode", type=click.Choice(["max-rho", "avg-neighbor"]), default="max-rho", show_default=True)
@click.option("--k-neighbors", type=int, default=10, show_default=True)
@click.option("--beta", type=float, default=2.0, show_default=True)
@click.option("--port", type=int, default=8765, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(input_path, header, label_column, dc, dc_mode, k_neighbors, beta, port, host):
    """Serve the interactive clustering API over HTTP."""
    import uvicorn

    from .server import create_app

    ps = load_points(input_path, label_column=label_column, header=header)
    app = create_app(ps, default_dc=dc, default_dc_mode=dc_mode,
                     default_k_neighbors=k_neighbors, default_beta=beta)
    uvicorn.run(app, host=host, port=port, log_level="warning")


@main.command()
@click.argument("name", type=click.Choice(sorted(synth_datasets.GENERATORS)))
@click.argument("out", type=click.Path())
@click.option("--seed", type=int, default=None, help="override the fixed default seed")
def synth(name, out, seed):
    """Write a deterministic synthetic benchmark dataset as CSV."""
    gen = synth_datasets.GENERATORS[name]
    ps = gen(seed) if seed is not None else gen()
    synth_datasets.write_csv(ps, out)
    click.echo(f"wrote {ps.n} points ({out})")


if __name__ == "__main__":
    main()
