"""Timing harness for checking empirical complexity.

Each algorithm runs once per (size, trial) on a freshly generated graph;
only the algorithm call is timed, with ``time.perf_counter``.  The scaling
exponent is the least-squares slope of log(median time) against log(V).
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from wgraphs import apsp, mst, sssp
from wgraphs.exceptions import UnknownAlgorithmError
from wgraphs.graphs import Graph
from wgraphs.harness.generators import GeneratorSpec, generate
from wgraphs.topsort import topological_sort

CSV_HEADER = ("algorithm", "v", "e", "trial", "seed", "wall_time_s")


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    v: int
    e: int
    trial: int
    seed: int
    wall_time: float


def _first(graph: Graph):
    return min(graph.iternodes())


# name -> (callable on a graph, needs a directed graph)
ALGORITHMS: dict[str, tuple[Callable[[Graph], object], bool]] = {
    "boruvka": (mst.boruvka_mst, False),
    "prim": (lambda g: mst.prim_mst(g, _first(g)), False),
    "prim_matrix": (lambda g: mst.prim_matrix_mst(g, _first(g)), False),
    "kruskal": (mst.kruskal_mst, False),
    "bellman_ford": (lambda g: sssp.bellman_ford(g, _first(g)), True),
    "bellman_ford_full": (
        lambda g: sssp.bellman_ford(g, _first(g), early_exit=False), True),
    "dijkstra": (lambda g: sssp.dijkstra(g, _first(g)), True),
    "dijkstra_matrix": (lambda g: sssp.dijkstra_matrix(g, _first(g)), True),
    "dag_shortest_path": (lambda g: sssp.dag_shortest_path(g, _first(g)), True),
    "topological_sort": (topological_sort, True),
    "floyd_warshall": (apsp.floyd_warshall, True),
    "johnson": (apsp.johnson, True),
    "slow_all_pairs": (apsp.slow_all_pairs, True),
    "faster_all_pairs": (apsp.faster_all_pairs, True),
}


def lookup(name: str) -> tuple[Callable[[Graph], object], bool]:
    try:
        return ALGORITHMS[name]
    except KeyError:
        known = ", ".join(sorted(ALGORITHMS))
        raise UnknownAlgorithmError(
            f"unknown algorithm {name!r} (known: {known})") from None


def bench(algorithm: str, sizes: Iterable[int], trials: int,
          template: GeneratorSpec) -> list[BenchRecord]:
    """Time ``algorithm`` on generated graphs of each size.

    Trial ``k`` uses seed ``template.seed + k``; the graph's directedness
    is forced to what the algorithm needs.
    """
    func, directed = lookup(algorithm)
    sizes = list(sizes)
    if sizes != sorted(sizes):
        raise ValueError("sizes must be ascending")
    records = []
    for n in sizes:
        for trial in range(trials):
            spec = template.replace(n=n, seed=template.seed + trial,
                                    directed=directed)
            graph = generate(spec)
            start = time.perf_counter()
            func(graph)
            elapsed = time.perf_counter() - start
            records.append(BenchRecord(algorithm, graph.v(), graph.e(),
                                       trial, spec.seed, elapsed))
    return records


def fit_slope(records: Iterable[BenchRecord]) -> float:
    """Slope of log(median wall time per size) versus log(V)."""
    by_size: dict[int, list[float]] = {}
    for r in records:
        by_size.setdefault(r.v, []).append(r.wall_time)
    if len(by_size) < 2:
        raise ValueError("need at least two sizes to fit a slope")
    v = np.array(sorted(by_size), dtype=float)
    t = np.array([np.median(by_size[int(x)]) for x in v])
    slope, _ = np.polyfit(np.log(v), np.log(t), 1)
    return float(slope)


def records_to_csv(records: Iterable[BenchRecord]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([r.algorithm, r.v, r.e, r.trial, r.seed, repr(r.wall_time)])
    return out.getvalue()


def records_from_csv(text: str) -> list[BenchRecord]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header!r}")
    return [BenchRecord(row[0], int(row[1]), int(row[2]), int(row[3]),
                        int(row[4]), float(row[5]))
            for row in reader if row]
