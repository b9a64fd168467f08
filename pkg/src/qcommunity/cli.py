"""Command-line experiment harness.

Runs the local search once per seed on one graph, for one or several
backends, and reports per-seed modularity and solver-call counts with
five-number summaries. Every backend sees the same seed list.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Sequence

import numpy as np

from .errors import QCommunityError
from .graph_io import Graph, read_edge_list
from .search import SearchConfig, run_local_search
from .solvers import AnnealConfig, QaoaConfig, SolverKind

logger = logging.getLogger("qcommunity")

DEFAULT_SEED_COUNT = 30
SIGNIFICANT_DIGITS = 12
BACKENDS = [kind.value for kind in SolverKind]
PER_SEED_FIELDS = ["seed", "modularity", "solver_calls", "iterations", "wall_time_seconds"]


def five_number_summary(values: Sequence[float]) -> Dict[str, float]:
    """min, quartiles and max; quartiles use inclusive linear interpolation."""
    q = np.percentile(np.asarray(values, dtype=np.float64), [0, 25, 50, 75, 100])
    return dict(zip(["min", "q1", "median", "q3", "max"], (float(x) for x in q)))


@dataclass
class ExperimentSummary:
    graph_name: str
    backend: str
    per_seed: List[dict] = field(default_factory=list)

    @property
    def modularity_stats(self):
        return five_number_summary([r["modularity"] for r in self.per_seed])

    @property
    def solver_call_stats(self):
        return five_number_summary([r["solver_calls"] for r in self.per_seed])

    def to_dict(self) -> dict:
        return {
            "graph_name": self.graph_name,
            "backend": self.backend,
            "per_seed": list(self.per_seed),
            "modularity_stats": self.modularity_stats,
            "solver_call_stats": self.solver_call_stats,
        }


def _round_reals(obj):
    if isinstance(obj, float):
        return float(f"{obj:.{SIGNIFICANT_DIGITS}g}")
    if isinstance(obj, dict):
        return {k: _round_reals(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_reals(v) for v in obj]
    return obj


def to_json(doc: dict) -> str:
    return json.dumps(_round_reals(doc), sort_keys=True, indent=2) + "\n"


def to_csv(summaries: Sequence[ExperimentSummary]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["graph_name", "backend"] + PER_SEED_FIELDS)
    for summary in summaries:
        for rec in _round_reals(summary.per_seed):
            writer.writerow([summary.graph_name, summary.backend] + [rec[f] for f in PER_SEED_FIELDS])
    return buf.getvalue()


def _run_seed(g: Graph, cfg: SearchConfig) -> dict:
    report = run_local_search(g, cfg)
    return {
        "seed": cfg.seed,
        "modularity": report.best_modularity,
        "solver_calls": report.solver_calls,
        "iterations": report.iterations,
        "wall_time_seconds": report.wall_time_seconds,
    }


def backend_config(backend: str, args: argparse.Namespace):
    if backend == SolverKind.ANNEAL.value:
        return AnnealConfig(sweeps=args.sweeps, restarts=args.restarts)
    if backend == SolverKind.QAOA.value:
        return QaoaConfig(depth=args.qaoa_depth, samples=args.qaoa_samples, max_qubits=args.max_qubits)
    return None


def run_experiment(g: Graph, graph_name: str, backend: str, seeds: Sequence[int],
                   args: argparse.Namespace) -> ExperimentSummary:
    configs = [
        SearchConfig(
            backend=backend,
            subproblem_size=args.subproblem_size,
            max_iters=args.max_iters,
            patience=args.patience,
            seed=seed,
            backend_config=backend_config(backend, args),
        )
        for seed in seeds
    ]
    workers = args.workers or os.cpu_count() or 1
    if workers > 1 and len(configs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(configs))) as pool:
            records = list(pool.map(_run_seed, [g] * len(configs), configs))
    else:
        records = [_run_seed(g, cfg) for cfg in configs]
    logger.info("%s/%s: %d seeds done", graph_name, backend, len(records))
    return ExperimentSummary(graph_name, backend, records)


def compare_backends(g: Graph, graph_name: str, backends: Sequence[str], seeds: Sequence[int],
                     args: argparse.Namespace) -> List[ExperimentSummary]:
    return [run_experiment(g, graph_name, b, seeds, args) for b in backends]


def _positive_int(text: str) -> int:
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return val


def _seed_list(text: str) -> List[int]:
    try:
        seeds = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad seed list {text!r}") from None
    if not seeds:
        raise argparse.ArgumentTypeError("seed list is empty")
    return seeds


def _backend_list(text: str) -> List[str]:
    names = [tok.strip() for tok in text.split(",") if tok.strip()]
    bad = [n for n in names if n not in BACKENDS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown backend(s) {bad}; choose from {BACKENDS}")
    return names


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qcommunity",
        description="Modularity bipartitioning by local search over small Ising subproblems.",
    )
    p.add_argument("--graph", required=True, type=Path, help="edge-list file")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--backend", choices=BACKENDS, default=None)
    which.add_argument("--backends", type=_backend_list, default=None,
                       help="comma-separated list of at least two backends to compare")
    p.add_argument("--subproblem-size", type=_positive_int, default=25)
    seeds = p.add_mutually_exclusive_group()
    seeds.add_argument("--seeds", type=_positive_int, default=None,
                       help=f"run seeds 0..N-1 (default {DEFAULT_SEED_COUNT})")
    seeds.add_argument("--seed-list", type=_seed_list, default=None, help="explicit comma-separated seeds")
    p.add_argument("--max-iters", type=_positive_int, default=500)
    p.add_argument("--patience", type=_positive_int, default=None,
                   help="non-improving iterations before stopping (default 1 exact, 5 otherwise)")
    p.add_argument("--qaoa-depth", type=_positive_int, default=2)
    p.add_argument("--qaoa-samples", type=_positive_int, default=1024)
    p.add_argument("--max-qubits", type=_positive_int, default=20)
    p.add_argument("--sweeps", type=_positive_int, default=1000)
    p.add_argument("--restarts", type=_positive_int, default=10)
    p.add_argument("--workers", type=_positive_int, default=None,
                   help="parallel seed workers (default: CPU count)")
    p.add_argument("--output", type=Path, default=None, help="write here instead of stdout")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backends is not None and len(args.backends) < 2:
        parser.error("--backends needs at least two backends")
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")

    if args.seed_list is not None:
        seeds = args.seed_list
    else:
        seeds = list(range(args.seeds or DEFAULT_SEED_COUNT))
    graph_name = args.graph.stem

    try:
        g = read_edge_list(args.graph)
        if args.backends is not None:
            summaries = compare_backends(g, graph_name, args.backends, seeds, args)
            doc = {"graph_name": graph_name, "backends": {s.backend: s.to_dict() for s in summaries}}
        else:
            summaries = [run_experiment(g, graph_name, args.backend or "exact", seeds, args)]
            doc = summaries[0].to_dict()
    except (QCommunityError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1

    text = to_json(doc) if args.format == "json" else to_csv(summaries)
    if args.output is not None:
        args.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
