"""Seeded random graph generators for tests and benchmarks.

Nodes are the integers ``0 .. n-1``.  Every generator is deterministic for a
given :class:`GeneratorSpec` (the seed feeds a private ``random.Random``).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from wgraphs.edges import Edge
from wgraphs.exceptions import InvalidSpecError
from wgraphs.graphs import Graph

MODELS = ("random-gnp", "random-connected", "complete", "dag", "tree-plus-edges")


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of a random graph.

    ``density`` is the edge probability for ``random-gnp``, ``dag`` and
    ``random-connected`` (extra edges on top of a spanning tree), and the
    fraction of the non-tree pairs added for ``tree-plus-edges``.  It is
    ignored by ``complete``.  With ``distinct`` set, integer weights are
    drawn without replacement from ``[lo, hi]``.
    """

    model: str = "random-gnp"
    n: int = 10
    density: float = 0.5
    weights: tuple[float, float] = (1, 100)
    integer: bool = True
    directed: bool = False
    seed: int = 0
    distinct: bool = False

    def replace(self, **changes) -> GeneratorSpec:
        return type(self)(**{**self.__dict__, **changes})


def _validate(spec: GeneratorSpec) -> None:
    if spec.model not in MODELS:
        raise InvalidSpecError(f"unknown model {spec.model!r}")
    if spec.n < 1:
        raise InvalidSpecError("n must be at least 1")
    if not 0 <= spec.density <= 1:
        raise InvalidSpecError("density must lie in [0, 1]")
    lo, hi = spec.weights
    if lo > hi:
        raise InvalidSpecError("weight range is empty")
    if spec.distinct and not spec.integer:
        raise InvalidSpecError("distinct weights need integer mode")
    if spec.model == "dag" and not spec.directed:
        raise InvalidSpecError("dag model needs directed=True")
    if spec.model in ("random-connected", "tree-plus-edges") and spec.directed:
        raise InvalidSpecError(f"{spec.model} graphs are undirected")


def random_tree_pairs(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Edges of a uniformly random labelled tree on ``0 .. n-1`` (Pruefer)."""
    if n < 2:
        return []
    if n == 2:
        return [(0, 1)]
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    pairs = []
    for x in code:
        leaf = next(i for i in range(n) if degree[i] == 1)
        pairs.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    pairs.append((u, v))
    return pairs


def _weights(spec: GeneratorSpec, count: int, rng: random.Random) -> list[float]:
    lo, hi = spec.weights
    if spec.distinct:
        lo, hi = int(lo), int(hi)
        if hi - lo + 1 < count:
            raise InvalidSpecError(
                f"cannot draw {count} distinct weights from [{lo}, {hi}]")
        return rng.sample(range(lo, hi + 1), count)
    if spec.integer:
        return [rng.randint(int(lo), int(hi)) for _ in range(count)]
    return [rng.uniform(lo, hi) for _ in range(count)]


def _pairs(spec: GeneratorSpec, rng: random.Random) -> list[tuple[int, int]]:
    n = spec.n
    if spec.directed:
        candidates = list(itertools.permutations(range(n), 2))
    else:
        candidates = list(itertools.combinations(range(n), 2))
    if spec.model == "complete":
        return candidates
    if spec.model == "random-gnp":
        return [p for p in candidates if rng.random() < spec.density]
    if spec.model == "dag":
        rank = list(range(n))
        rng.shuffle(rank)
        pairs = [(rank[i], rank[j])
                 for i, j in itertools.combinations(range(n), 2)]
        return [p for p in pairs if rng.random() < spec.density]
    tree = [tuple(sorted(p)) for p in random_tree_pairs(n, rng)]
    taken = set(tree)
    rest = [p for p in candidates if p not in taken]
    if spec.model == "random-connected":
        extra = [p for p in rest if rng.random() < spec.density]
    else:
        extra = rng.sample(rest, round(spec.density * len(rest)))
    return tree + extra


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph described by ``spec``."""
    _validate(spec)
    rng = random.Random(spec.seed)
    pairs = _pairs(spec, rng)
    weights = _weights(spec, len(pairs), rng)
    g = Graph(spec.n, directed=spec.directed)
    for node in range(spec.n):
        g.add_node(node)
    for (s, t), w in zip(pairs, weights):
        g.add_edge(Edge(s, t, w))
    return g


def apply_potentials(graph: Graph, spread: int, seed: int) -> Graph:
    """Copy of a directed graph with weights ``w + p(s) - p(t)``.

    ``p`` is a random integer potential in ``[0, spread]``.  Every cycle
    keeps its total weight, so non-negative input weights give a graph with
    mixed-sign weights but no negative cycle.
    """
    rng = random.Random(seed)
    p = {node: rng.randint(0, spread) for node in graph.iternodes()}
    out = Graph(graph.v(), directed=graph.is_directed())
    for node in graph.iternodes():
        out.add_node(node)
    for e in graph.iteredges():
        out.add_edge(Edge(e.source, e.target, e.weight + p[e.source] - p[e.target]))
    return out


def plant_negative_cycle(graph: Graph, seed: int, length: int | None = None) -> Graph:
    """Copy of a directed graph with a negative-weight cycle forced in.

    A random simple cycle through ``length`` distinct nodes (2 .. v) has its
    arcs set, or overwritten, so that the cycle weight is at most -1.
    """
    if not graph.is_directed():
        raise InvalidSpecError("negative cycles need a directed graph")
    if graph.v() < 2:
        raise InvalidSpecError("need at least two nodes for a cycle")
    rng = random.Random(seed)
    nodes = sorted(graph.iternodes())
    if length is None:
        length = rng.randint(2, len(nodes))
    cycle = rng.sample(nodes, length)
    arcs = list(zip(cycle, cycle[1:] + cycle[:1]))
    out = graph.copy()
    weights = [rng.randint(-10, 10) for _ in arcs]
    deficit = sum(weights) + rng.randint(1, 10)
    weights[0] -= deficit
    for (s, t), w in zip(arcs, weights):
        e = Edge(s, t, w)
        if out.has_edge(e):
            out.del_edge(e)
        out.add_edge(e)
    return out
