import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wgraphs import UnionFind
from wgraphs.exceptions import AlreadyPresentError, MissingElementError


def test_create_and_find():
    uf = UnionFind()
    uf.create("A")
    assert uf.find("A") == "A"
    uf.create("B")
    assert uf.find("A") != uf.find("B")
    with pytest.raises(AlreadyPresentError):
        uf.create("A")


def test_union_is_idempotent():
    uf = UnionFind("AB")
    assert uf.union("A", "B")
    root = uf.find("A")
    assert uf.find("B") == root
    assert not uf.union("A", "B")
    assert uf.find("A") == uf.find("B") == root
    assert uf.n_sets() == 1


def test_chain_union_is_transitive():
    uf = UnionFind("ABC")
    uf.union("A", "B")
    uf.union("B", "C")
    assert len({uf.find(x) for x in "ABC"}) == 1
    for x, y in itertools.permutations("ABC", 2):
        assert uf.find(x) == uf.find(y)


def test_missing_element():
    uf = UnionFind([1])
    with pytest.raises(MissingElementError):
        uf.find(2)
    with pytest.raises(MissingElementError):
        uf.union(1, 2)


def test_find_of_root_is_itself():
    uf = UnionFind(range(4))
    uf.union(0, 1)
    root = uf.find(1)
    assert uf.find(root) == root


def _naive_root(parent, x):
    while parent[x] != x:
        x = parent[x]
    return x


def test_path_compression_keeps_roots():
    # build a long chain by hand, then compare with naive parent chasing
    uf = UnionFind(range(50))
    for i in range(49):
        uf.parent[i] = i + 1
    before = {x: _naive_root(dict(uf.parent), x) for x in range(50)}
    assert all(uf.find(x) == before[x] for x in range(50))
    assert all(uf.parent[x] == 49 for x in range(50))


class NaivePartition:
    """Oracle: explicit list of blocks."""

    def __init__(self, n):
        self.blocks = [{i} for i in range(n)]

    def union(self, x, y):
        bx = next(b for b in self.blocks if x in b)
        by = next(b for b in self.blocks if y in b)
        if bx is by:
            return False
        self.blocks.remove(by)
        bx |= by
        return True

    def same(self, x, y):
        return any(x in b and y in b for b in self.blocks)


@settings(max_examples=300)
@given(st.integers(1, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=30))))
def test_equivalence_laws_against_naive_partition(case):
    n, unions = case
    uf = UnionFind(range(n))
    oracle = NaivePartition(n)
    effective = 0
    for x, y in unions:
        merged = uf.union(x, y)
        assert merged == oracle.union(x, y)
        effective += merged
    assert uf.n_sets() == n - effective
    same = {(x, y): uf.find(x) == uf.find(y) for x in range(n) for y in range(n)}
    for x in range(n):
        assert same[x, x]
    for x, y in same:
        assert same[x, y] == same[y, x] == oracle.same(x, y)
    for x, y, z in itertools.product(range(n), repeat=3):
        if same[x, y] and same[y, z]:
            assert same[x, z]
