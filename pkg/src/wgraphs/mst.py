"""Minimum spanning trees: Boruvka, Prim (heap and matrix), Kruskal.

Boruvka and Kruskal return a spanning forest as an undirected graph.  The
Prim variants grow a single tree from a source node and return it as a
parent map plus, for every tree node, the weight of the edge joining it to
its parent.  Ties between equal weights are broken by the :class:`Edge`
order, so results are deterministic even with repeated weights.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Hashable

from wgraphs.edges import Edge
from wgraphs.exceptions import MissingNodeError, WrongModeError
from wgraphs.graphs import Graph
from wgraphs.unionfind import UnionFind

__all__ = [
    "MstResult",
    "boruvka_mst",
    "prim_mst",
    "prim_matrix_mst",
    "kruskal_mst",
]


@dataclass
class MstResult:
    """Outcome of an MST computation.

    Exactly one of ``tree`` (forest form) or ``parent``/``distance``
    (rooted-tree form) is set.  ``total_weight`` is always filled in.
    """

    total_weight: float
    tree: Graph | None = None
    parent: dict[Hashable, Hashable | None] | None = None
    distance: dict[Hashable, float] | None = None
    source: Hashable | None = None
    phases: int = 0

    def edges(self) -> set[Edge]:
        """Tree edges, each normalized so that ``source < target``."""
        if self.tree is not None:
            return set(self.tree.iteredges())
        return {Edge(p, t, self.distance[t]).normalized()
                for t, p in self.parent.items() if p is not None}

    def to_graph(self) -> Graph:
        if self.tree is not None:
            return self.tree
        g = Graph(len(self.parent))
        for node in self.parent:
            g.add_node(node)
        for edge in self.edges():
            g.add_edge(edge)
        return g


def _check_undirected(graph: Graph) -> None:
    if graph.is_directed():
        raise WrongModeError("graph is directed")


def _empty_forest(graph: Graph) -> Graph:
    forest = Graph(graph.v())
    for node in graph.iternodes():
        forest.add_node(node)
    return forest


_NO_EDGE = Edge(None, None, math.inf)


def boruvka_mst(graph: Graph) -> MstResult:
    """Minimum spanning forest by Boruvka's algorithm.

    Each phase scans all edges once, picks the cheapest edge leaving every
    component and merges along those edges; the number of components at
    least halves per phase, giving O(E log V).  Disconnected graphs yield
    one tree per connected component.
    """
    _check_undirected(graph)
    uf = UnionFind(graph.iternodes())
    forest = _empty_forest(graph)
    components = set(graph.iternodes())
    phases = 0
    while len(components) > 1:
        phases += 1
        cheapest = dict.fromkeys(components, _NO_EDGE)
        for edge in graph.iteredges():
            source = uf.find(edge.source)
            target = uf.find(edge.target)
            if source == target:
                continue
            for root in (source, target):
                best = cheapest[root]
                if best is _NO_EDGE or edge < best:
                    cheapest[root] = edge
        merged = False
        for edge in cheapest.values():
            if edge is _NO_EDGE:   # component is already a full tree
                continue
            if uf.union(edge.source, edge.target):
                forest.add_edge(edge)
                merged = True
        if not merged:
            break
        components = {uf.find(root) for root, edge in cheapest.items()
                      if edge is not _NO_EDGE}
    total = sum(edge.weight for edge in forest.iteredges())
    return MstResult(total_weight=total, tree=forest, phases=phases)


def _pick_source(graph: Graph, source: Hashable | None) -> Hashable | None:
    if source is None:
        return next(graph.iternodes(), None)
    if not graph.has_node(source):
        raise MissingNodeError(f"source {source!r} not in graph")
    return source


def _prim_result(parent, distance, source) -> MstResult:
    total = sum(distance[t] for t, p in parent.items() if p is not None)
    return MstResult(total_weight=total, parent=parent, distance=distance,
                     source=source)


def prim_mst(graph: Graph, source: Hashable | None = None) -> MstResult:
    """Prim's algorithm with a binary heap and lazy deletion, O(E log V).

    Grows one tree from ``source`` (any node if omitted), so only the
    component of ``source`` is spanned.  Negative weights are fine.
    Stale heap entries are skipped instead of using decrease-key.
    """
    _check_undirected(graph)
    source = _pick_source(graph, source)
    if source is None:
        return MstResult(total_weight=0, parent={}, distance={})
    distance = {source: 0}
    parent = {source: None}
    in_tree = set()
    pq = [(0, source)]
    while pq:
        _, node = heapq.heappop(pq)
        if node in in_tree:
            continue
        in_tree.add(node)
        for target, w in graph.neighbors(node).items():
            if target in in_tree:
                continue
            if target not in distance or w < distance[target]:
                distance[target] = w
                parent[target] = node
                heapq.heappush(pq, (w, target))
    return _prim_result(parent, distance, source)


def prim_matrix_mst(graph: Graph, source: Hashable | None = None) -> MstResult:
    """Prim's algorithm with a linear minimum scan, O(V**2).

    Suited to dense graphs.  Same contract as :func:`prim_mst`.
    """
    _check_undirected(graph)
    source = _pick_source(graph, source)
    if source is None:
        return MstResult(total_weight=0, parent={}, distance={})
    inf = math.inf
    distance = dict.fromkeys(graph.iternodes(), inf)
    parent = dict.fromkeys(graph.iternodes())
    in_queue = dict.fromkeys(graph.iternodes(), True)
    distance[source] = 0
    for _ in range(graph.v()):
        node = min((n for n in graph.iternodes() if in_queue[n]),
                   key=distance.__getitem__)
        if distance[node] == inf:   # rest lies outside the source component
            break
        in_queue[node] = False
        for target, w in graph.neighbors(node).items():
            if in_queue[target] and w < distance[target]:
                distance[target] = w
                parent[target] = node
    reached = [n for n in graph.iternodes() if not in_queue[n]]
    return _prim_result({n: parent[n] for n in reached},
                        {n: distance[n] for n in reached}, source)


def kruskal_mst(graph: Graph) -> MstResult:
    """Minimum spanning forest by Kruskal's algorithm, O(E log V).

    Edges leave a binary heap in increasing order; an edge joining two
    different trees of the forest is kept, any other one is discarded.
    """
    _check_undirected(graph)
    uf = UnionFind(graph.iternodes())
    forest = _empty_forest(graph)
    pq = list(graph.iteredges())
    heapq.heapify(pq)
    needed = graph.v() - 1
    while pq and needed > 0:
        edge = heapq.heappop(pq)
        if uf.union(edge.source, edge.target):
            forest.add_edge(edge)
            needed -= 1
    total = sum(edge.weight for edge in forest.iteredges())
    return MstResult(total_weight=total, tree=forest)
