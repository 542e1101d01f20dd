"""Simple weighted graphs stored as a dict of dicts."""

from __future__ import annotations

import math
from typing import Hashable, Iterator

from wgraphs.edges import Edge
from wgraphs.exceptions import (
    DuplicateEdgeError,
    InvalidEdgeError,
    MissingEdgeError,
    MissingNodeError,
    WrongModeError,
)


class Graph:
    """A simple weighted graph, directed or undirected.

    Nodes are any hashable, mutually comparable objects (usually ints or
    strings).  The adjacency structure maps ``node -> {neighbor: weight}``.
    An undirected edge is stored as both of its orientations and counted
    once by :meth:`e`.  ``n`` is a capacity hint kept for compatibility
    with matrix-backed implementations; it is ignored.

    Mutating a graph while one of its ``iter*`` generators is alive is
    unsupported and not detected.

    >>> G = Graph(n=3, directed=False)
    >>> G.add_edge(Edge('A', 'B', 5))
    >>> G.add_edge(Edge('A', 'C', 7))
    >>> G.v(), G.e()
    (3, 2)
    """

    def __init__(self, n: int = 0, directed: bool = False):
        if n < 0:
            raise ValueError("capacity hint must be non-negative")
        self.n = n
        self.directed = directed
        self._adj: dict[Hashable, dict[Hashable, float]] = {}

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"<Graph {kind} v={self.v()} e={self.e()}>"

    def is_directed(self) -> bool:
        return self.directed

    def v(self) -> int:
        """Number of nodes."""
        return len(self._adj)

    def e(self) -> int:
        """Number of edges."""
        arcs = sum(len(nbrs) for nbrs in self._adj.values())
        return arcs if self.directed else arcs // 2

    def add_node(self, node: Hashable) -> None:
        """Add ``node``; adding an existing node is a no-op."""
        if node not in self._adj:
            self._adj[node] = {}

    def has_node(self, node: Hashable) -> bool:
        return node in self._adj

    def _require(self, node: Hashable) -> dict[Hashable, float]:
        try:
            return self._adj[node]
        except KeyError:
            raise MissingNodeError(f"node {node!r} not in graph") from None

    def del_node(self, node: Hashable) -> None:
        """Remove ``node`` together with all incident edges."""
        self._require(node)
        if self.directed:
            for nbrs in self._adj.values():
                nbrs.pop(node, None)
        else:
            for target in self._adj[node]:
                del self._adj[target][node]
        del self._adj[node]

    def add_edge(self, edge: Edge) -> None:
        """Add ``edge``; missing endpoints are added as nodes."""
        if edge.source == edge.target:
            raise InvalidEdgeError(f"loops are forbidden: {edge!r}")
        if math.isnan(edge.weight):
            raise InvalidEdgeError(f"weight is NaN: {edge!r}")
        if self.has_edge(edge):
            raise DuplicateEdgeError(f"edge already present: {edge!r}")
        self.add_node(edge.source)
        self.add_node(edge.target)
        self._adj[edge.source][edge.target] = edge.weight
        if not self.directed:
            self._adj[edge.target][edge.source] = edge.weight

    def del_edge(self, edge: Edge) -> None:
        """Remove ``edge`` (either orientation for undirected graphs)."""
        if not self.has_edge(edge):
            raise MissingEdgeError(f"edge not in graph: {edge!r}")
        del self._adj[edge.source][edge.target]
        if not self.directed:
            del self._adj[edge.target][edge.source]

    def has_edge(self, edge: Edge) -> bool:
        """True if an arc ``source -> target`` exists; the weight is ignored."""
        nbrs = self._adj.get(edge.source)
        return nbrs is not None and edge.target in nbrs

    def weight(self, edge: Edge) -> float:
        """Stored weight of the arc ``source -> target``, or 0 if absent."""
        nbrs = self._adj.get(edge.source)
        if nbrs is None:
            return 0
        return nbrs.get(edge.target, 0)

    def iternodes(self) -> Iterator[Hashable]:
        return iter(self._adj)

    def iteredges(self) -> Iterator[Edge]:
        """Yield every edge once.

        For undirected graphs the representative has ``source < target``.
        """
        for source, nbrs in self._adj.items():
            for target, w in nbrs.items():
                if self.directed or source < target:
                    yield Edge(source, target, w)

    def iteroutedges(self, node: Hashable) -> Iterator[Edge]:
        nbrs = self._require(node)
        return (Edge(node, target, w) for target, w in nbrs.items())

    def iterinedges(self, node: Hashable) -> Iterator[Edge]:
        nbrs = self._require(node)
        if not self.directed:
            return (Edge(source, node, w) for source, w in nbrs.items())
        return (Edge(source, node, out[node])
                for source, out in self._adj.items() if node in out)

    def degree(self, node: Hashable) -> int:
        if self.directed:
            raise WrongModeError("degree() is for undirected graphs")
        return len(self._require(node))

    def outdegree(self, node: Hashable) -> int:
        if not self.directed:
            raise WrongModeError("outdegree() is for directed graphs")
        return len(self._require(node))

    def indegree(self, node: Hashable) -> int:
        if not self.directed:
            raise WrongModeError("indegree() is for directed graphs")
        self._require(node)
        return sum(1 for out in self._adj.values() if node in out)

    def neighbors(self, node: Hashable) -> dict[Hashable, float]:
        """Read-only view of the adjacency map of ``node``.

        Used by the inner loops of the algorithms to avoid creating an
        :class:`Edge` per arc.  Do not mutate the returned dict.
        """
        return self._require(node)

    def copy(self) -> Graph:
        new = self.__class__(self.n, directed=self.directed)
        new._adj = {node: dict(nbrs) for node, nbrs in self._adj.items()}
        return new

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.directed == other.directed and self._adj == other._adj

    __hash__ = None  # mutable
