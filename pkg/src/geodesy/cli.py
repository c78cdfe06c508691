"""Command-line interface: one subcommand per library operation, JSON or CSV reports.

Exit status is 0 on success, 1 on domain errors (unknown vertex, no path,
budget exceeded, ...) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from . import bounds, entropy, extremal, filling, geodesic, graph, search, walk
from .errors import GeodesyError

SUBCOMMANDS = (
    "count", "enumerate", "sample", "entropy", "certify", "refine",
    "gen", "search", "walk", "fill", "girth",
)


def _path_json(path) -> list:
    return [list(p) if isinstance(p, tuple) else p for p in path]


def _load(args) -> graph.MultiGraph:
    return graph.read_graph(args.graph, args.graph_format)


def _dag(args):
    return geodesic.geodesic_dag(_load(args), args.source, args.target)


def cmd_count(args):
    dag = _dag(args)
    return {"n": str(dag.n_total), "t": dag.t}


def cmd_enumerate(args):
    paths = geodesic.enumerate_shortest_paths(_load(args), args.source, args.target, cap=args.cap)
    return {"count": str(len(paths)), "paths": [_path_json(p) for p in paths]}


def cmd_sample(args):
    dag = _dag(args)
    paths = [geodesic.sample_shortest_path(dag, args.seed + i) for i in range(args.samples)]
    return {
        "t": dag.t,
        "n": str(dag.n_total),
        "paths": [_path_json(p) for p in paths],
        "probabilities": [str(geodesic.path_probability(dag, p)) for p in paths],
    }


def cmd_entropy(args):
    dag = _dag(args)
    out = {"t": dag.t, "n": str(dag.n_total), "delta": dag.delta}
    out.update(entropy.entropy_decomposition(dag).to_dict())
    out["degree_split"] = entropy.check_degree_split(dag).to_dict()
    return out


def cmd_certify(args):
    claims = [c.strip() for c in args.claims.split(",") if c.strip()] if args.claims else list(bounds.KINDS)
    for c in claims:
        if c not in bounds.KINDS:
            raise GeodesyError(f"unknown claim kind {c!r}; choose from {', '.join(bounds.KINDS)}")
    return bounds.certify(_load(args), args.source, args.target, claims, delta=args.delta).to_dict()


def cmd_refine(args):
    dag = _dag(args)
    value = bounds.refined_certificate(dag)
    thm = bounds.evaluate_bound("theorem1", max(dag.delta, 1), dag.t)
    n = dag.n_total
    return {
        "n": str(n),
        "t": dag.t,
        "n_squared": str(n * n),
        "refined_certificate": str(value),
        "theorem1_squared": str(thm.squared_value),
        "holds": n * n <= value,
    }


def cmd_gen(args):
    if args.family == "cycle":
        G, x, y = extremal.gen_cycle_multigraph(args.delta, args.t)
        family = "cycle-multigraph"
    else:
        G, x, y = extremal.gen_blowup_cycle(args.delta, args.t, args.mode, args.girth, args.budget)
        family = {"even": "blowup-cycle", "odd-alternating": "blowup-cycle-odd", "high-girth": "blowup-high-girth"}[
            args.mode
        ]
    meta = {"family": family, "delta": args.delta, "t": args.t, "x": x, "y": y}
    out = {
        "family": family,
        "x": x,
        "y": y,
        "vertices": len(G),
        "records": len(G.edges),
        "max_degree": graph.max_degree(G),
    }
    if family in ("cycle-multigraph", "blowup-cycle"):
        out["closed_form_count"] = str(extremal.closed_form_count(family, args.delta, args.t))
    fmt = args.out_format or ("json" if args.out and args.out.endswith(".json") else "edge-list")
    text = graph.serialize_graph(G, fmt, meta)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        out["out"] = args.out
    else:
        out["graph"] = json.loads(graph.serialize_graph(G, "json"))
    return out


def cmd_search(args):
    res = search.search_max_count(
        args.delta, args.t, args.layer_cap, args.simple, profile_limit=args.profile_limit, jobs=args.jobs
    )
    out = res.to_dict()
    thm = bounds.evaluate_bound("theorem1", args.delta, args.t)
    out["theorem1_floor"] = str(thm.floor())
    return out


def cmd_walk(args, warnings):
    W = graph.parse_weighted_graph(Path(args.graph).read_text(encoding="utf-8"))
    q = walk.quantize_weights(W, args.delta)
    warnings.extend(q.warnings)
    prob = walk.minimal_arrival_probability(q, args.source, args.target)
    t = geodesic.geodesic_dag(q.graph, args.source, args.target).t
    cap = walk.arrival_bound(t)
    return {
        "t": t,
        "probability": str(prob),
        "bound": str(cap),
        "within_bound": prob <= cap,
        "quantization_error": str(q.quantization_error),
    }


def _read_chain(X, args, dim):
    if args.boundary_of:
        ids = [int(s) for s in args.boundary_of.split(",") if s.strip()]
        return filling.boundary(X, filling.ChainF2.from_support(dim + 1, ids))
    if not args.chain:
        raise GeodesyError("give --chain FILE or --boundary-of IDS")
    try:
        items = json.loads(Path(args.chain).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise GeodesyError(f"chain file is not valid JSON: {exc.msg}") from None
    if not isinstance(items, list):
        raise GeodesyError("chain file must be a JSON list of face ids")
    return X.chain_from_json(dim, items)


def cmd_fill(args):
    X = filling.build_complex(args.complex)
    dim = X.dimension - 1 if args.chain_dim is None else args.chain_dim
    c = _read_chain(X, args, dim)
    out = {"complex": repr(X), "chain_dim": c.dim, "chain_support": sorted(c.support)}
    if args.action == "minimal-fillings":
        out.update(filling.minimal_fillings(X, c, args.kernel_cap, args.list_cap).to_dict())
    else:
        out["irreducible"] = filling.is_irreducible(X, c)
    return out


def cmd_girth(args):
    g = graph.girth(_load(args))
    return {"girth": "acyclic" if g is None else g}


def _add_graph_args(p, pair=True):
    p.add_argument("--graph", required=True, help="graph file (edge list, or JSON by .json suffix)")
    p.add_argument("--graph-format", choices=["edge-list", "json"])
    if pair:
        p.add_argument("--source", required=True)
        p.add_argument("--target", required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geodesy", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    parser.add_argument("--timing", action="store_true", help="include wall-clock time in the report")
    sub = parser.add_subparsers(dest="command", required=True)

    _add_graph_args(sub.add_parser("count", help="count shortest paths"))
    p = sub.add_parser("enumerate", help="list shortest paths explicitly")
    _add_graph_args(p)
    p.add_argument("--cap", type=int, default=geodesic.DEFAULT_ENUMERATION_CAP)
    p = sub.add_parser("sample", help="sample uniform shortest paths")
    _add_graph_args(p)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--samples", type=int, default=1)
    _add_graph_args(sub.add_parser("entropy", help="entropy decomposition of a uniform shortest path"))
    p = sub.add_parser("certify", help="check the count against closed-form bounds")
    _add_graph_args(p)
    p.add_argument("--claims", help="comma-separated bound kinds (default: all)")
    p.add_argument("--delta", type=int, help="declared degree bound (>= max degree)")
    _add_graph_args(sub.add_parser("refine", help="per-graph refined squared bound"))

    p = sub.add_parser("gen", help="generate an extremal family")
    p.add_argument("family", choices=["cycle", "blowup"])
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--mode", choices=["even", "odd-alternating", "high-girth"], default="even")
    p.add_argument("--girth", type=int, help="required girth lower bound (exclusive) for high-girth mode")
    p.add_argument("--budget", type=int, default=extremal.DEFAULT_GADGET_BUDGET)
    p.add_argument("--out")
    p.add_argument("--out-format", choices=["edge-list", "json"])

    p = sub.add_parser("search", help="exhaustive maximum over layered profiles")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--layer-cap", type=int, default=search.DEFAULT_LAYER_CAP)
    p.add_argument("--simple", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--profile-limit", type=int, help="overrides GEODESY_PROFILE_LIMIT")

    p = sub.add_parser("walk", help="minimal-time arrival probability of a quantized walk")
    p.add_argument("--graph", required=True, help="weighted edge list 'u v w'")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)

    p = sub.add_parser("fill", help="minimal fillings / irreducibility over F2")
    p.add_argument("action", choices=["minimal-fillings", "irreducible"])
    p.add_argument("--complex", required=True, help="grid2d(p,q), grid3d(p,q,r), cube-surface, or JSON file")
    p.add_argument("--chain", help="JSON list of face ids")
    p.add_argument("--boundary-of", help="use the boundary of these comma-separated higher faces")
    p.add_argument("--chain-dim", type=int)
    p.add_argument("--kernel-cap", type=int, default=filling.DEFAULT_KERNEL_CAP)
    p.add_argument("--list-cap", type=int, default=filling.DEFAULT_LIST_CAP)

    _add_graph_args(sub.add_parser("girth", help="shortest cycle length"), pair=False)
    return parser


def _inputs(args) -> dict:
    skip = {"format", "timing", "command"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    results = report.get("results", {})
    row = {"command": report["command"]}
    row.update({k: v for k, v in results.items() if isinstance(v, (str, int, float, bool)) or v is None})
    if "error" in report:
        row["error"] = report["error"]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(row), lineterminator="\n")
    writer.writeheader()
    writer.writerow(row)
    return buf.getvalue()


def run_cli(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    warnings: list[str] = []
    report: dict = {"command": args.command, "inputs": _inputs(args)}
    start = time.perf_counter()
    handler = globals()[f"cmd_{args.command}"]
    try:
        results = handler(args, warnings) if args.command == "walk" else handler(args)
    except (GeodesyError, OSError, ValueError) as exc:
        report["error"] = f"{type(exc).__name__}: {exc}"
        stdout.write(_render(report, args.format))
        return 1
    report["results"] = results
    report["warnings"] = warnings
    if args.timing:
        report["timing_s"] = round(time.perf_counter() - start, 6)
    stdout.write(_render(report, args.format))
    return 0


def main(argv=None) -> int:
    return run_cli(argv)


if __name__ == "__main__":
    sys.exit(main())
