"""Command-line interface.

Subcommands: classify (label a graph from seed labels), sweep (precision
curves over a parameter grid, CSV output), verify (property self-checks),
ridge (paired-comparison rating). Exit codes: 0 success, 1 input error,
2 verification failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import experiments, ridge, verify
from .graph import GraphError, load_edge_list
from .kernels import generalized_ssl_apply, heat_kernel_apply, regularized_laplacian_apply
from .labeling import LabelError, build_label_matrix, classify, load_labels, resolve_labels
from .solvers import SolverSpec


def _solver_spec(args) -> SolverSpec:
    kinds = {
        "cg": "conjugate-gradient",
        "power": "power-iteration",
        "cholesky": "dense-cholesky",
        "auto": "auto",
    }
    return SolverSpec(kind=kinds[args.solver], tolerance=args.tol)


def cmd_classify(args) -> int:
    g = load_edge_list(args.edges, allow_disconnected=args.allow_components)
    seeds = resolve_labels(load_labels(args.labels), g)
    n_classes = max(seeds.values()) + 1
    y = build_label_matrix(seeds, g.n_nodes, n_classes)
    if args.method == "rl":
        f = regularized_laplacian_apply(g, args.beta, y, _solver_spec(args))
    elif args.method.startswith("heat-"):
        f = heat_kernel_apply(g, args.method[len("heat-"):], args.t, y, tol=args.tol)
    elif args.method == "pagerank":
        f = generalized_ssl_apply(g, 0.0, args.mu, "adjacency", y)
    else:
        raise GraphError("unknown method %r" % args.method)
    labels = classify(f)
    for i in range(g.n_nodes):
        print("%s %d" % (g.name_of(i), labels[i]))
    return 0


def _parse_config(path) -> experiments.SweepConfig:
    """Minimal "key: value" config reader for sweep runs."""
    values: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if ":" not in line:
                raise ValueError("config line %d: expected 'key: value'" % lineno)
            key, val = line.split(":", 1)
            values[key.strip()] = val.strip()

    def grid_of(text):
        parts = text.split()
        if parts[0] == "logspace":
            lo, hi, n = float(parts[1]), float(parts[2]), int(parts[3])
            return experiments.default_grid(lo, hi, n)
        return sorted(float(v) for v in text.replace(",", " ").split())

    strategy = values.get("strategy", "uniform")
    if strategy == "high-degree":
        strategy = ("high-degree", int(values.get("pool_size", "3")))
    return experiments.SweepConfig(
        edges_path=values["edges"],
        labels_path=values.get("labels"),
        method=values.get("method", "rl"),
        grid=grid_of(values.get("grid", "logspace 1e-3 1e3 25")),
        strategy=strategy,
        per_class=int(values.get("per_class", "2")),
        n_trials=int(values.get("n_trials", "100")),
        rng_seed=int(values.get("rng_seed", "0")),
        include_seeds=values.get("include_seeds", "no") in ("yes", "true", "1"),
    )


def cmd_sweep(args) -> int:
    cfg = _parse_config(args.config)
    result = experiments.run_sweep(cfg)
    experiments.write_csv(result, args.out)
    means = result.mean_by_param()
    best = max(means, key=means.get)
    print("wrote %s; best mean precision %.4f at %g" % (args.out, means[best], best))
    return 0


def cmd_verify(args) -> int:
    results = verify.run_all(max_nodes=args.max_nodes)
    width = max(len(r.name) for r in results)
    failed = 0
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print("%-*s  %s  %s" % (width, r.name, status, r.detail))
        failed += 0 if r.ok else 1
    if failed:
        print("%d check(s) failed" % failed)
        return 2
    print("all %d checks passed" % len(results))
    return 0


def cmd_ridge(args) -> int:
    comparisons = ridge.load_comparisons(args.input)
    values = ridge.ridge_estimate(comparisons, args.ridge_lambda)
    for i, v in enumerate(values):
        print("%d %.10g" % (i, v))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lssl",
                                     description="Graph semi-supervised learning with Laplacian kernels")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify all nodes from seed labels")
    p.add_argument("--edges", required=True)
    p.add_argument("--labels", required=True, help="seed label file: 'node class' lines")
    p.add_argument("--method", default="rl",
                   choices=["rl", "heat-standard", "heat-normalized", "heat-pagerank", "pagerank"])
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--mu", type=float, default=1.0)
    p.add_argument("--solver", default="auto", choices=["auto", "cg", "power", "cholesky"])
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--allow-components", action="store_true",
                   help="accept disconnected graphs; components are classified independently")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("sweep", help="run a parameter sweep and write a CSV")
    p.add_argument("--config", required=True, help="key: value config file")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("verify", help="run the property self-check suite")
    p.add_argument("--max-nodes", type=int, default=30)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("ridge", help="estimate item values from paired comparisons")
    p.add_argument("--lambda", dest="ridge_lambda", type=float, required=True)
    p.add_argument("--input", required=True, help="comparison file: 'i j r' lines")
    p.set_defaults(fn=cmd_ridge)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (GraphError, LabelError, ValueError, OSError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
