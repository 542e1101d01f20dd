"""Randomized correctness sweeps against the brute-force oracles.

Each suite generates seeded instances, runs every applicable algorithm and
collects human-readable failure messages.  An empty failure list means the
suite passed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from wgraphs import apsp, mst, sssp
from wgraphs.edges import Edge
from wgraphs.exceptions import GraphError, InvalidSpecError
from wgraphs.graphs import Graph
from wgraphs.harness import oracles
from wgraphs.harness.generators import GeneratorSpec, apply_potentials, generate

SUITES = ("mst", "sssp", "apsp")


@dataclass
class VerifyReport:
    suite: str
    instances: int = 0
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"{status} {self.suite}: {self.instances} instances, "
                f"{self.checks} checks, {len(self.failures)} failures")


def path_weight(graph: Graph, path: list) -> float | None:
    """Sum of arc weights along ``path``, or None if an arc is missing."""
    total = 0
    for s, t in zip(path, path[1:]):
        e = Edge(s, t)
        if not graph.has_edge(e):
            return None
        total += graph.weight(e)
    return total


def check_path(graph: Graph, path: list, source, target, dist) -> str | None:
    if not path or path[0] != source or path[-1] != target:
        return f"path {path} does not run {source!r} -> {target!r}"
    w = path_weight(graph, path)
    if w is None:
        return f"path {path} uses a missing edge"
    if w != dist:
        return f"path {path} weighs {w}, reported distance {dist}"
    return None


def mst_instance(rng: random.Random, max_n: int, seed: int) -> Graph:
    n = rng.randint(2, min(max_n, oracles.MAX_MST_NODES))
    spec = GeneratorSpec("random-connected", n=n, density=rng.uniform(0.1, 0.6),
                         weights=(1, 100), distinct=True, seed=seed)
    return generate(spec)


def sssp_instance(rng: random.Random, max_n: int, seed: int) -> Graph:
    n = rng.randint(2, min(max_n, oracles.MAX_PATH_NODES))
    spec = GeneratorSpec("random-gnp", n=n, density=rng.uniform(0.1, 0.5),
                         weights=(0, 20), directed=True, seed=seed)
    return generate(spec)


def dag_instance(rng: random.Random, max_n: int, seed: int) -> Graph:
    n = rng.randint(2, max_n)
    spec = GeneratorSpec("dag", n=n, density=rng.uniform(0.2, 0.8),
                         weights=(-20, 20), directed=True, seed=seed)
    return generate(spec)


def apsp_instance(rng: random.Random, max_n: int, seed: int) -> Graph:
    """Mixed-sign directed graph without negative cycles."""
    n = rng.randint(2, max_n)
    spec = GeneratorSpec("random-gnp", n=n, density=rng.uniform(0.2, 0.7),
                         weights=(0, 10), directed=True, seed=seed)
    return apply_potentials(generate(spec), spread=10, seed=seed)


def _verify_mst(rng, report, instances, max_n, seed):
    for i in range(instances):
        g = mst_instance(rng, max_n, seed + i)
        report.instances += 1
        weight, edges = oracles.oracle_mst(g)
        for name, func in (("boruvka", mst.boruvka_mst), ("prim", mst.prim_mst),
                           ("prim_matrix", mst.prim_matrix_mst),
                           ("kruskal", mst.kruskal_mst)):
            result = func(g)
            report.checks += 1
            if result.total_weight != weight:
                report.failures.append(
                    f"instance {i}: {name} weight {result.total_weight} != {weight}")
            elif result.edges() != edges:
                report.failures.append(f"instance {i}: {name} edge set differs")


def _verify_sssp(rng, report, instances, max_n, seed):
    for i in range(instances):
        g = sssp_instance(rng, max_n, seed + i)
        report.instances += 1
        for s in g.iternodes():
            expected = oracles.oracle_distances(g, s)
            for name, func in (("dijkstra", sssp.dijkstra),
                               ("dijkstra_matrix", sssp.dijkstra_matrix),
                               ("bellman_ford", sssp.bellman_ford)):
                result = func(g, s)
                report.checks += 1
                if result.distance != expected:
                    report.failures.append(
                        f"instance {i}: {name} from {s!r} disagrees with oracle")
                    continue
                for t, d in result.distance.items():
                    if d != float("inf"):
                        msg = check_path(g, result.path(t), s, t, d)
                        if msg:
                            report.failures.append(f"instance {i}: {name}: {msg}")
        dag = dag_instance(rng, max_n, seed + i)
        for s in dag.iternodes():
            report.checks += 1
            if (sssp.dag_shortest_path(dag, s).distance
                    != sssp.bellman_ford(dag, s).distance):
                report.failures.append(
                    f"instance {i}: dag_shortest_path from {s!r} disagrees")


def _verify_apsp(rng, report, instances, max_n, seed):
    for i in range(instances):
        g = apsp_instance(rng, max_n, seed + i)
        report.instances += 1
        try:
            fw, parent = apsp.floyd_warshall(g)
            results = {"johnson": apsp.johnson(g),
                       "slow_all_pairs": apsp.slow_all_pairs(g),
                       "faster_all_pairs": apsp.faster_all_pairs(g)}
        except GraphError as exc:
            report.failures.append(f"instance {i}: unexpected {exc!r}")
            continue
        for name, d in results.items():
            report.checks += 1
            if d != fw:
                report.failures.append(f"instance {i}: {name} != floyd_warshall")
        for s in g.iternodes():
            report.checks += 1
            if sssp.bellman_ford(g, s).distance != fw[s]:
                report.failures.append(f"instance {i}: row {s!r} != bellman_ford")
            for t, d in fw[s].items():
                if d != float("inf"):
                    msg = check_path(g, apsp.reconstruct_path_apsp(parent, s, t),
                                     s, t, d)
                    if msg:
                        report.failures.append(f"instance {i}: {msg}")


def verify(suite: str, instances: int, max_n: int, seed: int) -> VerifyReport:
    """Run one correctness suite (``mst``, ``sssp`` or ``apsp``)."""
    if suite not in SUITES:
        raise InvalidSpecError(f"unknown suite {suite!r}")
    if max_n < 2:
        raise InvalidSpecError("max_n must be at least 2")
    rng = random.Random(seed)
    report = VerifyReport(suite)
    runner = {"mst": _verify_mst, "sssp": _verify_sssp, "apsp": _verify_apsp}[suite]
    runner(rng, report, instances, max_n, seed)
    return report
