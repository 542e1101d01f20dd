"""Directed weighted edges."""

from __future__ import annotations

from typing import Any, Hashable


class Edge:
    """A directed weighted edge ``source -> target``.

    Edges are hashable and totally ordered by ``(weight, source, target)``,
    so two distinct edges never compare equal even when their weights tie.
    ``~edge`` (or :meth:`reverse`) gives the edge with the opposite
    direction and the same weight.  The weight is stored as a float.
    """

    __slots__ = ("source", "target", "weight")

    def __init__(self, source: Hashable, target: Hashable, weight: float = 1):
        self.source = source
        self.target = target
        self.weight = float(weight)

    def __repr__(self) -> str:
        w = self.weight
        if w.is_integer():
            w = int(w)
        return f"Edge({self.source!r}, {self.target!r}, {w!r})"

    def _key(self) -> tuple:
        return (self.weight, self.source, self.target)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Edge):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.weight == other.weight)

    def __ne__(self, other: Any) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.weight))

    def __lt__(self, other: Edge) -> bool:
        if not isinstance(other, Edge):
            return NotImplemented
        return self._key() < other._key()

    def __le__(self, other: Edge) -> bool:
        if not isinstance(other, Edge):
            return NotImplemented
        return self._key() <= other._key()

    def __gt__(self, other: Edge) -> bool:
        if not isinstance(other, Edge):
            return NotImplemented
        return self._key() > other._key()

    def __ge__(self, other: Edge) -> bool:
        if not isinstance(other, Edge):
            return NotImplemented
        return self._key() >= other._key()

    def reverse(self) -> Edge:
        return Edge(self.target, self.source, self.weight)

    __invert__ = reverse

    def normalized(self) -> Edge:
        """Representative with ``source < target`` (for undirected edges)."""
        if self.target < self.source:
            return self.reverse()
        return self
