"""Single-source shortest paths on directed graphs.

All algorithms return an :class:`SsspResult` holding a distance map (with
``math.inf`` for unreachable nodes) and a shortest-path tree encoded as a
parent map.  Undirected graphs are rejected.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Hashable

from wgraphs.edges import Edge
from wgraphs.exceptions import (
    MissingNodeError,
    NegativeCycleError,
    NegativeWeightError,
    NoPathError,
    WrongModeError,
)
from wgraphs.graphs import Graph
from wgraphs.topsort import topological_sort

__all__ = [
    "SsspResult",
    "relax",
    "bellman_ford",
    "dijkstra",
    "dijkstra_matrix",
    "dag_shortest_path",
    "reconstruct_path",
]


@dataclass
class SsspResult:
    source: Hashable
    distance: dict[Hashable, float]
    parent: dict[Hashable, Hashable | None]
    # nodes in the order they were permanently settled (Dijkstra only)
    order: list[Hashable] = field(default_factory=list)

    def path(self, target: Hashable) -> list[Hashable]:
        return reconstruct_path(self, target)


def relax(distance: dict, parent: dict, edge: Edge) -> bool:
    """Try to shorten the path to ``edge.target`` through ``edge``.

    Updates ``distance`` and ``parent`` in place and returns True on
    success.  An unreachable source never fires since ``inf + w == inf``.
    """
    alt = distance[edge.source] + edge.weight
    if alt < distance[edge.target]:
        distance[edge.target] = alt
        parent[edge.target] = edge.source
        return True
    return False


def _init(graph: Graph, source: Hashable):
    if not graph.is_directed():
        raise WrongModeError("graph is not directed")
    if not graph.has_node(source):
        raise MissingNodeError(f"source {source!r} not in graph")
    distance = dict.fromkeys(graph.iternodes(), math.inf)
    parent = dict.fromkeys(graph.iternodes())
    distance[source] = 0
    return distance, parent


def bellman_ford(graph: Graph, source: Hashable,
                 early_exit: bool = True) -> SsspResult:
    """Bellman-Ford algorithm, O(V*E); negative weights allowed.

    Relaxes every edge ``V - 1`` times, then makes one more pass: any edge
    that can still be relaxed lies on or behind a negative cycle reachable
    from ``source``, and :class:`NegativeCycleError` is raised.  With
    ``early_exit`` the passes stop as soon as one changes nothing; the
    result is the same.
    """
    distance, parent = _init(graph, source)
    arcs = [(s, t, w) for s in graph.iternodes()
            for t, w in graph.neighbors(s).items()]
    for _ in range(graph.v() - 1):
        changed = False
        for s, t, w in arcs:
            alt = distance[s] + w
            if alt < distance[t]:
                distance[t] = alt
                parent[t] = s
                changed = True
        if early_exit and not changed:
            break
    for s, t, w in arcs:
        if distance[s] + w < distance[t]:
            raise NegativeCycleError("negative cycle reachable from source")
    return SsspResult(source, distance, parent)


def _check_nonnegative(graph: Graph) -> None:
    for s in graph.iternodes():
        for t, w in graph.neighbors(s).items():
            if w < 0:
                raise NegativeWeightError(
                    f"negative weight {w} on {s!r} -> {t!r}")


def dijkstra(graph: Graph, source: Hashable) -> SsspResult:
    """Dijkstra's algorithm with a binary heap and lazy deletion.

    Requires non-negative weights (checked up front).  Runs in O(E log V).
    """
    distance, parent = _init(graph, source)
    _check_nonnegative(graph)
    settled = set()
    order = []
    pq = [(0, source)]
    while pq:
        _, node = heapq.heappop(pq)
        if node in settled:   # stale entry
            continue
        settled.add(node)
        order.append(node)
        d = distance[node]
        for target, w in graph.neighbors(node).items():
            if target in settled:
                continue
            alt = d + w
            if alt < distance[target]:
                distance[target] = alt
                parent[target] = node
                heapq.heappush(pq, (alt, target))
    return SsspResult(source, distance, parent, order)


def dijkstra_matrix(graph: Graph, source: Hashable) -> SsspResult:
    """Dijkstra's algorithm with a linear minimum scan, O(V**2).

    Better than the heap version on dense graphs.
    """
    distance, parent = _init(graph, source)
    _check_nonnegative(graph)
    in_queue = dict.fromkeys(graph.iternodes(), True)
    order = []
    for _ in range(graph.v()):
        node = min((n for n in graph.iternodes() if in_queue[n]),
                   key=distance.__getitem__)
        d = distance[node]
        if d == math.inf:   # everything left is unreachable
            break
        in_queue[node] = False
        order.append(node)
        for target, w in graph.neighbors(node).items():
            if in_queue[target] and d + w < distance[target]:
                distance[target] = d + w
                parent[target] = node
    return SsspResult(source, distance, parent, order)


def dag_shortest_path(graph: Graph, source: Hashable) -> SsspResult:
    """Shortest paths in a DAG by relaxing out-edges in topological order.

    One pass, O(V + E); negative weights are allowed.  Raises
    :class:`CyclicGraphError` if the graph is not acyclic.
    """
    distance, parent = _init(graph, source)
    for node in topological_sort(graph):
        d = distance[node]
        if d == math.inf:
            continue
        for target, w in graph.neighbors(node).items():
            if d + w < distance[target]:
                distance[target] = d + w
                parent[target] = node
    return SsspResult(source, distance, parent)


def reconstruct_path(result: SsspResult, target: Hashable) -> list[Hashable]:
    """Node list from ``result.source`` to ``target`` along parent links."""
    if target not in result.parent:
        raise MissingNodeError(f"target {target!r} not in result")
    path = [target]
    node = target
    limit = len(result.parent)
    while node != result.source:
        node = result.parent[node]
        if node is None:
            raise NoPathError(f"no path to {target!r}")
        path.append(node)
        if len(path) > limit:
            raise RuntimeError("parent map contains a cycle")
    path.reverse()
    return path
