"""All-pairs shortest paths on directed graphs.

Distance matrices are nested dicts ``d[source][target]`` with 0 on the
diagonal and ``math.inf`` for unreachable pairs; parent matrices hold
``parent[source][target]``, the predecessor of ``target`` on a shortest
``source -> target`` path (None on the diagonal and for unreachable pairs).
"""

from __future__ import annotations

import math
from typing import Hashable, Iterator

import numpy as np

from wgraphs.edges import Edge
from wgraphs.exceptions import (
    MissingNodeError,
    NegativeCycleError,
    NoPathError,
    ShapeError,
    WrongModeError,
)
from wgraphs.graphs import Graph
from wgraphs.sssp import bellman_ford, dijkstra

DistanceMatrix = dict[Hashable, dict[Hashable, float]]
ParentMatrix = dict[Hashable, dict[Hashable, Hashable | None]]

__all__ = [
    "DistanceMatrix",
    "ParentMatrix",
    "floyd_warshall",
    "floyd_warshall_steps",
    "reconstruct_path_apsp",
    "johnson",
    "johnson_reweight",
    "weight_matrix",
    "min_plus_product",
    "slow_all_pairs",
    "faster_all_pairs",
    "to_array",
]


def _check_directed(graph: Graph) -> None:
    if not graph.is_directed():
        raise WrongModeError("graph is not directed")


def _initial_matrices(graph: Graph) -> tuple[DistanceMatrix, ParentMatrix]:
    nodes = list(graph.iternodes())
    distance = {}
    parent = {}
    for s in nodes:
        row = dict.fromkeys(nodes, math.inf)
        row[s] = 0
        prow = dict.fromkeys(nodes)
        for t, w in graph.neighbors(s).items():
            row[t] = w
            prow[t] = s
        distance[s] = row
        parent[s] = prow
    return distance, parent


def _relax_through(nodes, distance, parent) -> Iterator[Hashable]:
    # the three nested loops; yields after each intermediate node
    inf = math.inf
    for k in nodes:
        dk = distance[k]
        pk = parent[k]
        for s in nodes:
            ds = distance[s]
            dsk = ds[k]
            if dsk == inf:
                continue
            ps = parent[s]
            for t in nodes:
                alt = dsk + dk[t]
                if alt < ds[t]:
                    ds[t] = alt
                    ps[t] = pk[t]
        yield k


def floyd_warshall_steps(graph: Graph) -> Iterator[tuple[Hashable, DistanceMatrix]]:
    """Yield ``(node, distance)`` after each intermediate node is admitted.

    ``distance`` is the live matrix, mutated by later steps; copy it to
    keep a snapshot.  Useful for watching the dynamic programme converge.
    """
    _check_directed(graph)
    distance, parent = _initial_matrices(graph)
    for k in _relax_through(list(distance), distance, parent):
        yield k, distance


def floyd_warshall(graph: Graph) -> tuple[DistanceMatrix, ParentMatrix]:
    """Floyd-Warshall algorithm with path reconstruction, Theta(V**3).

    Negative weights are allowed.  A negative entry left on the diagonal
    reveals a negative cycle and raises :class:`NegativeCycleError`.
    """
    _check_directed(graph)
    distance, parent = _initial_matrices(graph)
    for _ in _relax_through(list(distance), distance, parent):
        pass
    if any(distance[node][node] < 0 for node in distance):
        raise NegativeCycleError("negative cycle detected")
    return distance, parent


def reconstruct_path_apsp(parent: ParentMatrix, source: Hashable,
                          target: Hashable) -> list[Hashable]:
    """Shortest path from ``source`` to ``target`` as a node list."""
    if source not in parent or target not in parent:
        raise MissingNodeError("source or target not in parent matrix")
    row = parent[source]
    path = [target]
    node = target
    limit = len(parent)
    while node != source:
        node = row[node]
        if node is None:
            raise NoPathError(f"no path from {source!r} to {target!r}")
        path.append(node)
        if len(path) > limit:
            raise RuntimeError("parent matrix contains a cycle")
    path.reverse()
    return path


class _AuxNode:
    """Extra source node for Johnson's algorithm; equal only to itself."""

    def __repr__(self) -> str:
        return "<aux>"


def johnson_reweight(graph: Graph) -> tuple[Graph, dict[Hashable, float]]:
    """Reweight ``graph`` so that every arc weight becomes non-negative.

    A fresh node joined to every node by a zero-weight arc is added to a
    copy of the graph, and Bellman-Ford from it gives potentials ``h``.
    The returned graph has weights ``w(u, v) + h(u) - h(v)``, which are
    >= 0 exactly (also in floating point, thanks to the evaluation order).
    The input graph is not modified.
    """
    _check_directed(graph)
    work = graph.copy()
    aux = _AuxNode()
    work.add_node(aux)
    for node in graph.iternodes():
        work.add_edge(Edge(aux, node, 0))
    h = bellman_ford(work, aux).distance   # may raise NegativeCycleError
    del h[aux]
    reweighted = Graph(graph.v(), directed=True)
    for node in graph.iternodes():
        reweighted.add_node(node)
    for s in graph.iternodes():
        hs = h[s]
        for t, w in graph.neighbors(s).items():
            reweighted.add_edge(Edge(s, t, (w + hs) - h[t]))
    return reweighted, h


def johnson(graph: Graph, return_parents: bool = False):
    """Johnson's algorithm, O(V E log V); best on sparse graphs.

    Negative weights are removed by :func:`johnson_reweight`, then Dijkstra
    runs from every node and the potentials are undone.  Returns the
    distance matrix, or ``(distance, parent)`` if ``return_parents``.
    """
    reweighted, h = johnson_reweight(graph)
    distance = {}
    parent = {}
    for s in graph.iternodes():
        result = dijkstra(reweighted, s)
        hs = h[s]
        distance[s] = {t: d - hs + h[t] for t, d in result.distance.items()}
        parent[s] = result.parent
    if return_parents:
        return distance, parent
    return distance


def weight_matrix(graph: Graph) -> DistanceMatrix:
    """Single-edge distances: 0 on the diagonal, ``w(s, t)`` or inf elsewhere."""
    _check_directed(graph)
    return _initial_matrices(graph)[0]


def min_plus_product(X: DistanceMatrix, Y: DistanceMatrix) -> DistanceMatrix:
    """Min-plus product ``Z[i][j] = min_k X[i][k] + Y[k][j]``.

    Both matrices must be indexed by the same node set.  A new matrix is
    returned; the inputs are left untouched.
    """
    nodes = list(X)
    keys = X.keys()
    if keys != Y.keys() or any(row.keys() != keys for row in X.values()) \
            or any(row.keys() != keys for row in Y.values()):
        raise ShapeError("matrices are indexed by different node sets")
    inf = math.inf
    Z = {}
    for i in nodes:
        zi = dict.fromkeys(nodes, inf)
        for k, xik in X[i].items():
            if xik == inf:
                continue
            yk = Y[k]
            for j in nodes:
                alt = xik + yk[j]
                if alt < zi[j]:
                    zi[j] = alt
        Z[i] = zi
    return Z


def slow_all_pairs(graph: Graph) -> DistanceMatrix:
    """All-pairs distances by repeated min-plus extension, O(V**4).

    ``L1 = W`` and ``Lm = L(m-1) (x) W`` up to ``m = V - 1``.  The graph must
    be free of negative cycles.
    """
    W = weight_matrix(graph)
    L = W
    for _ in range(2, graph.v()):
        L = min_plus_product(L, W)
    return L


def faster_all_pairs(graph: Graph) -> DistanceMatrix:
    """All-pairs distances by repeated min-plus squaring, O(V**3 log V).

    ``L(2m) = Lm (x) Lm`` until ``m >= V - 1``; that takes
    ``ceil(log2(V - 1))`` products.  The graph must be free of negative
    cycles.
    """
    L = weight_matrix(graph)
    m = 1
    while m < graph.v() - 1:
        L = min_plus_product(L, L)
        m *= 2
    return L


def to_array(matrix: DistanceMatrix, nodes=None) -> tuple[np.ndarray, list]:
    """Dense ``float64`` copy of a distance matrix and its node order.

    Nodes are sorted unless an explicit order is given.
    """
    if nodes is None:
        nodes = sorted(matrix)
    nodes = list(nodes)
    arr = np.array([[matrix[s][t] for t in nodes] for s in nodes],
                   dtype=np.float64).reshape(len(nodes), len(nodes))
    return arr, nodes
