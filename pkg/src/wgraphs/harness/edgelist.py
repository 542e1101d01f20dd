"""Plain-text edge-list format.

::

    directed 1
    # comment
    A B 5
    B C -2.5
    node D

The header ``directed <0|1>`` comes first (blank and ``#`` lines may
precede it).  Edge lines are ``source target weight``; ``node <label>``
declares an isolated node.  Labels are whitespace-free tokens; tokens that
look like integers are read back as ``int`` so generated graphs
round-trip.
"""

from __future__ import annotations

import io
import re
from typing import Hashable

from wgraphs.edges import Edge
from wgraphs.exceptions import FormatError, GraphError
from wgraphs.graphs import Graph

_INT = re.compile(r"[+-]?\d+\Z")


def _label(token: str) -> Hashable:
    return int(token) if _INT.match(token) else token


def _format_weight(w: float) -> str:
    if w.is_integer() and abs(w) < 2**53:
        return str(int(w))
    return repr(w)


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse edge-list text into a :class:`Graph`.

    Raises :class:`FormatError` (with the line number) on malformed input;
    loop and duplicate edges propagate the graph's own errors.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    graph = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if graph is None:
            if len(fields) != 2 or fields[0] != "directed" or fields[1] not in ("0", "1"):
                raise FormatError("expected header 'directed <0|1>'", lineno)
            graph = Graph(directed=fields[1] == "1")
            continue
        if fields[0] == "node" and len(fields) == 2:
            graph.add_node(_label(fields[1]))
            continue
        if len(fields) != 3:
            raise FormatError(f"expected 'source target weight', got {line!r}",
                              lineno)
        try:
            weight = float(fields[2])
        except ValueError:
            raise FormatError(f"bad weight {fields[2]!r}", lineno) from None
        try:
            graph.add_edge(Edge(_label(fields[0]), _label(fields[1]), weight))
        except GraphError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
    if graph is None:
        raise FormatError("missing header 'directed <0|1>'")
    return graph


def write_edge_list(graph: Graph) -> str:
    """Serialize ``graph``; :func:`parse_edge_list` inverts this."""
    out = io.StringIO()
    out.write(f"directed {int(graph.is_directed())}\n")
    touched = set()
    for edge in graph.iteredges():
        touched.add(edge.source)
        touched.add(edge.target)
        out.write(f"{edge.source} {edge.target} {_format_weight(edge.weight)}\n")
    for node in graph.iternodes():
        if node not in touched:
            out.write(f"node {node}\n")
    return out.getvalue()


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def save_edge_list(graph: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_edge_list(graph))
