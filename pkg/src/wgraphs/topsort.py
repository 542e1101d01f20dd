"""Topological sorting of directed acyclic graphs (Kahn's method)."""

from __future__ import annotations

import heapq
from typing import Hashable

from wgraphs.exceptions import CyclicGraphError, WrongModeError
from wgraphs.graphs import Graph


def topological_sort(graph: Graph) -> list[Hashable]:
    """Return the nodes of ``graph`` so that every arc points forward.

    Among nodes that are ready at the same time the smallest one comes
    first, which makes the result deterministic.  Runs in O(V log V + E).

    Raises :class:`CyclicGraphError` if the graph has a directed cycle.
    """
    if not graph.is_directed():
        raise WrongModeError("graph is not directed")
    indegree = dict.fromkeys(graph.iternodes(), 0)
    for source in graph.iternodes():
        for target in graph.neighbors(source):
            indegree[target] += 1
    ready = [node for node, deg in indegree.items() if deg == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        node = heapq.heappop(ready)
        order.append(node)
        for target in graph.neighbors(node):
            indegree[target] -= 1
            if indegree[target] == 0:
                heapq.heappush(ready, target)
    if len(order) < graph.v():
        raise CyclicGraphError("graph has a directed cycle")
    return order
