"""Command-line front end: ``python -m wgraphs <command> ...``.

Exit codes: 0 success, 1 verification (or algorithm) failure, 2 usage
error, 3 input-format error.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

from wgraphs import apsp, mst, sssp
from wgraphs.exceptions import FormatError, GraphError, InvalidSpecError
from wgraphs.harness import bench as bench_mod
from wgraphs.harness.edgelist import _label, read_edge_list, save_edge_list
from wgraphs.harness.generators import MODELS, GeneratorSpec, generate
from wgraphs.harness.verify import SUITES, verify
from wgraphs.topsort import topological_sort

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_FORMAT = 0, 1, 2, 3

MST_ALGOS = {"boruvka": mst.boruvka_mst, "kruskal": mst.kruskal_mst,
             "prim": mst.prim_mst, "prim_matrix": mst.prim_matrix_mst}
SSSP_ALGOS = {"bellman_ford": sssp.bellman_ford, "dijkstra": sssp.dijkstra,
              "dijkstra_matrix": sssp.dijkstra_matrix,
              "dag_shortest_path": sssp.dag_shortest_path}
APSP_ALGOS = {"floyd_warshall", "johnson", "slow_all_pairs", "faster_all_pairs"}
RUN_ALGOS = sorted([*MST_ALGOS, *SSSP_ALGOS, *APSP_ALGOS, "topological_sort"])


class UsageError(Exception):
    pass


def _weight_range(text: str) -> tuple[float, float]:
    try:
        lo, hi = text.split(":")
        return float(lo), float(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from None


def _sizes(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ints, got {text!r}") from None


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, float):
        if math.isinf(x):
            return "inf"
        if x.is_integer():
            return str(int(x))
    return str(x)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wgraphs",
                                     description="Weighted graph algorithms harness.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a random graph as an edge list")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--weights", type=_weight_range, default=(1, 100))
    p.add_argument("--int", dest="integer", action="store_true",
                   help="integer weights")
    p.add_argument("--distinct", action="store_true",
                   help="distinct integer weights")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = sub.add_parser("run", help="run one algorithm on an edge-list file")
    p.add_argument("--algo", choices=RUN_ALGOS, required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--source")
    p.add_argument("--target")
    p.add_argument("--show-path", action="store_true")
    p.add_argument("--csv", action="store_true", help="CSV instead of text")

    p = sub.add_parser("verify", help="randomized oracle agreement suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--instances", type=int, default=100)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("bench", help="time an algorithm over graph sizes")
    p.add_argument("--algo", choices=sorted(bench_mod.ALGORITHMS), required=True)
    p.add_argument("--sizes", type=_sizes, required=True)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--model", choices=MODELS, default="complete")
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--weights", type=_weight_range, default=(1, 100))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    return parser


def _emit(rows, header, as_csv, out):
    if as_csv:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows([[_fmt(x) for x in row] for row in rows])
    else:
        for row in rows:
            out.write(" ".join(_fmt(x) for x in row) + "\n")


def _node(graph, token):
    node = _label(token)
    if not graph.has_node(node):
        raise UsageError(f"node {token!r} not in graph")
    return node


def cmd_generate(args, out) -> int:
    spec = GeneratorSpec(model=args.model, n=args.n, density=args.density,
                         weights=args.weights,
                         integer=args.integer or args.distinct,
                         directed=args.directed, seed=args.seed,
                         distinct=args.distinct)
    graph = generate(spec)
    save_edge_list(graph, args.out)
    out.write(f"wrote {args.out}: v={graph.v()} e={graph.e()}\n")
    return EXIT_OK


def _load(path):
    try:
        return read_edge_list(path)
    except FormatError:
        raise
    except GraphError as exc:   # loops, duplicates
        raise FormatError(str(exc)) from None


def cmd_run(args, out) -> int:
    graph = _load(args.graph)
    source = _node(graph, args.source) if args.source is not None else None
    target = _node(graph, args.target) if args.target is not None else None
    algo = args.algo

    if algo == "topological_sort":
        _emit([[node] for node in topological_sort(graph)], ["node"], args.csv, out)
    elif algo in MST_ALGOS:
        if algo.startswith("prim"):
            result = MST_ALGOS[algo](graph, source)
            rows = [[t, p, result.distance[t]] for t, p in result.parent.items()]
            _emit(rows, ["node", "parent", "weight"], args.csv, out)
        else:
            result = MST_ALGOS[algo](graph)
            rows = [[e.source, e.target, e.weight]
                    for e in sorted(result.tree.iteredges())]
            _emit(rows, ["source", "target", "weight"], args.csv, out)
        if not args.csv:
            out.write(f"total_weight {_fmt(result.total_weight)}\n")
    elif algo in SSSP_ALGOS:
        if source is None:
            raise UsageError(f"{algo} needs --source")
        result = SSSP_ALGOS[algo](graph, source)
        targets = [target] if target is not None else list(result.distance)
        rows = [[t, result.distance[t], result.parent[t]] for t in targets]
        _emit(rows, ["node", "distance", "parent"], args.csv, out)
        if args.show_path:
            if target is None:
                raise UsageError("--show-path needs --target")
            out.write("path " + " ".join(map(str, result.path(target))) + "\n")
    else:
        parent = None
        if algo == "floyd_warshall":
            distance, parent = apsp.floyd_warshall(graph)
        elif algo == "johnson":
            distance, parent = apsp.johnson(graph, return_parents=True)
        else:
            distance = getattr(apsp, algo)(graph)
        sources = [source] if source is not None else list(distance)
        rows = [[s, t, distance[s][t]] for s in sources
                for t in ([target] if target is not None else distance[s])]
        _emit(rows, ["source", "target", "distance"], args.csv, out)
        if args.show_path:
            if source is None or target is None:
                raise UsageError("--show-path needs --source and --target")
            if parent is None:
                raise UsageError(f"{algo} does not record paths")
            if algo == "johnson":
                path = sssp.reconstruct_path(
                    sssp.SsspResult(source, distance[source], parent[source]), target)
            else:
                path = apsp.reconstruct_path_apsp(parent, source, target)
            out.write("path " + " ".join(map(str, path)) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    report = verify(args.suite, args.instances, args.max_n, args.seed)
    for msg in report.failures:
        out.write(f"  {msg}\n")
    out.write(report.summary() + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_bench(args, out) -> int:
    template = GeneratorSpec(model=args.model, density=args.density,
                             weights=args.weights, seed=args.seed)
    records = bench_mod.bench(args.algo, args.sizes, args.trials, template)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(bench_mod.records_to_csv(records))
    out.write(f"wrote {len(records)} records to {args.out}\n")
    if len(set(r.v for r in records)) >= 2:
        out.write(f"log-log slope {bench_mod.fit_slope(records):.3f}\n")
    return EXIT_OK


COMMANDS = {"generate": cmd_generate, "run": cmd_run,
            "verify": cmd_verify, "bench": cmd_bench}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, InvalidSpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
