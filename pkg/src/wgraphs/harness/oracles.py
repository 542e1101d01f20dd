"""Exhaustive reference answers for small graphs.

These are deliberately naive: they enumerate simple paths or edge subsets
and share no code with the algorithms they are used to check.
"""

from __future__ import annotations

import itertools
import math
from typing import Hashable

from wgraphs.edges import Edge
from wgraphs.exceptions import (
    DisconnectedGraphError,
    InstanceTooLargeError,
    MissingNodeError,
    WrongModeError,
)
from wgraphs.graphs import Graph

MAX_PATH_NODES = 12
MAX_MST_NODES = 8


def oracle_distances(graph: Graph, source: Hashable) -> dict[Hashable, float]:
    """Minimum weight over all simple paths from ``source`` to every node.

    Unreachable nodes get ``math.inf``.  If the graph has no negative
    cycle, some shortest path is simple, so these are the true distances.
    """
    if graph.v() > MAX_PATH_NODES:
        raise InstanceTooLargeError(
            f"{graph.v()} nodes; path enumeration is limited to {MAX_PATH_NODES}")
    if not graph.has_node(source):
        raise MissingNodeError(f"source {source!r} not in graph")
    best = dict.fromkeys(graph.iternodes(), math.inf)
    best[source] = 0
    on_path = {source}

    def extend(node, weight):
        for target, w in graph.neighbors(node).items():
            if target in on_path:
                continue
            total = weight + w
            if total < best[target]:
                best[target] = total
            on_path.add(target)
            extend(target, total)
            on_path.remove(target)

    extend(source, 0)
    return best


def oracle_shortest_path(graph: Graph, source: Hashable, target: Hashable) -> float:
    """Shortest ``source -> target`` weight by simple-path enumeration."""
    if not graph.has_node(target):
        raise MissingNodeError(f"target {target!r} not in graph")
    return oracle_distances(graph, source)[target]


def _connected(nodes, edges) -> bool:
    if not nodes:
        return True
    adj = {node: [] for node in nodes}
    for e in edges:
        adj[e.source].append(e.target)
        adj[e.target].append(e.source)
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        for nxt in adj[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == len(nodes)


def oracle_mst(graph: Graph) -> tuple[float, set[Edge]]:
    """Minimum spanning tree weight and one optimal edge set.

    Tries every subset of ``v - 1`` edges and keeps the acyclic ones (which,
    with ``v - 1`` edges, are exactly the spanning trees).  Among trees of
    equal weight the first one found is returned.
    """
    if graph.is_directed():
        raise WrongModeError("graph is directed")
    n = graph.v()
    if n > MAX_MST_NODES:
        raise InstanceTooLargeError(
            f"{n} nodes; spanning-tree enumeration is limited to {MAX_MST_NODES}")
    nodes = list(graph.iternodes())
    edges = list(graph.iteredges())
    if not _connected(nodes, edges):
        raise DisconnectedGraphError("graph has no spanning tree")
    index = {node: i for i, node in enumerate(nodes)}
    pairs = [(index[e.source], index[e.target], e.weight) for e in edges]
    best_weight = math.inf
    best_subset = ()
    for subset in itertools.combinations(range(len(pairs)), n - 1):
        label = list(range(n))
        total = 0
        for i in subset:
            a, b, w = pairs[i]
            la, lb = label[a], label[b]
            if la == lb:
                break
            label = [la if x == lb else x for x in label]
            total += w
        else:
            if total < best_weight:
                best_weight = total
                best_subset = subset
    if n <= 1:
        best_weight = 0
    return best_weight, {edges[i] for i in best_subset}


def oracle_mst_weight(graph: Graph) -> float:
    """Minimum total weight over all spanning trees of ``graph``."""
    return oracle_mst(graph)[0]
