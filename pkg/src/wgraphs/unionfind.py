"""Disjoint-set forest with union by rank and path compression."""

from __future__ import annotations

from typing import Hashable, Iterable

from wgraphs.exceptions import AlreadyPresentError, MissingElementError


class UnionFind:
    """Disjoint-set structure over arbitrary hashable elements.

    Elements must be registered with :meth:`create` before use.  Both
    :meth:`find` and :meth:`union` run in O(α(n)) amortized time.  Note that
    :meth:`find` compresses paths, so it mutates the structure.
    """

    def __init__(self, elements: Iterable[Hashable] = ()):
        self.parent: dict[Hashable, Hashable] = {}
        self.rank: dict[Hashable, int] = {}
        for x in elements:
            self.create(x)

    def __len__(self) -> int:
        return len(self.parent)

    def __contains__(self, x: Hashable) -> bool:
        return x in self.parent

    def create(self, x: Hashable) -> None:
        """Make ``x`` a singleton set."""
        if x in self.parent:
            raise AlreadyPresentError(f"element {x!r} already created")
        self.parent[x] = x
        self.rank[x] = 0

    def find(self, x: Hashable) -> Hashable:
        """Return the canonical representative of the set holding ``x``."""
        parent = self.parent
        if x not in parent:
            raise MissingElementError(f"element {x!r} was never created")
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: Hashable, y: Hashable) -> bool:
        """Merge the sets holding ``x`` and ``y``.

        Returns False if they were already in the same set.
        """
        rx = self.find(x)
        ry = self.find(y)
        if rx == ry:
            return False
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        return True

    def n_sets(self) -> int:
        """Number of disjoint sets currently held."""
        return sum(1 for x, p in self.parent.items() if x == p)
