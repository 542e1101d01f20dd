import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import digraph, ugraph
from wgraphs import Edge, Graph
from wgraphs.exceptions import (
    DuplicateEdgeError,
    InvalidEdgeError,
    MissingEdgeError,
    MissingNodeError,
    WrongModeError,
)


# --- Edge -----------------------------------------------------------------

def test_edge_default_weight_and_reverse():
    e = Edge("A", "B")
    assert e.weight == 1
    r = ~e
    assert (r.source, r.target, r.weight) == ("B", "A", 1)
    assert ~~e == e
    assert e.reverse() == r


def test_edge_order_breaks_ties_by_nodes():
    assert Edge(1, 2, 5) < Edge(0, 3, 6)
    assert Edge(0, 3, 5) < Edge(1, 2, 5)
    assert Edge(1, 2, 5) < Edge(1, 3, 5)
    assert Edge(1, 2, 5) != Edge(2, 1, 5)


def test_edge_hash_and_set_membership():
    assert len({Edge(1, 2, 3), Edge(1, 2, 3), Edge(1, 2, 4)}) == 2


nodes = st.integers(0, 6)
weights = st.integers(-5, 5)
edges = st.builds(Edge, nodes, nodes, weights)


@given(edges)
def test_reverse_is_an_involution(e):
    assert ~~e == e
    assert (~e).weight == e.weight


@given(edges, edges)
def test_edge_order_trichotomy(a, b):
    outcomes = [a < b, a == b, b < a]
    assert sum(outcomes) == 1


# --- Graph: worked example ---------------------------------------------------

def test_worked_example(listing_graph):
    g = listing_graph
    assert not g.is_directed()
    assert (g.v(), g.e()) == (3, 2)
    assert set(g.iternodes()) == {"A", "B", "C"}
    assert sorted((g.degree(v) for v in g.iternodes()), reverse=True) == [2, 1, 1]
    assert {v for v in g.iternodes() if g.degree(v) == 1} == {"B", "C"}
    assert sum(e.weight for e in g.iteredges()) == 12


def test_new_graph():
    g = Graph(3, directed=False)
    assert (g.v(), g.e(), g.is_directed()) == (0, 0, False)
    d = Graph(0, directed=True)
    assert (d.v(), d.e(), d.is_directed()) == (0, 0, True)


def test_capacity_hint_is_ignored():
    g = Graph(5)
    g.add_node("x")
    g.add_node("y")
    assert g.v() == 2


def test_add_edge_errors():
    g = Graph()
    with pytest.raises(InvalidEdgeError):
        g.add_edge(Edge("A", "A", 1))
    g.add_edge(Edge("A", "B", 5))
    with pytest.raises(DuplicateEdgeError):
        g.add_edge(Edge("A", "B", 5))
    with pytest.raises(DuplicateEdgeError):
        g.add_edge(Edge("B", "A", 2))


def test_del_node(listing_graph):
    listing_graph.del_node("A")
    assert (listing_graph.v(), listing_graph.e()) == (2, 0)
    g = Graph()
    g.add_node("A")
    g.del_node("A")
    assert g.v() == 0
    with pytest.raises(MissingNodeError):
        g.del_node("A")


def test_del_node_directed():
    g = digraph((1, 2, 1), (3, 1, 1), (2, 3, 1))
    g.del_node(1)
    assert (g.v(), g.e()) == (2, 1)
    assert set(g.iteredges()) == {Edge(2, 3, 1)}


def test_del_edge_either_orientation(listing_graph):
    listing_graph.del_edge(Edge("B", "A"))
    assert listing_graph.e() == 1
    assert not listing_graph.has_edge(Edge("A", "B"))
    with pytest.raises(MissingEdgeError):
        listing_graph.del_edge(Edge("A", "B"))


def test_weight(listing_graph):
    assert listing_graph.weight(Edge("A", "B")) == 5
    assert listing_graph.weight(Edge("B", "A")) == 5
    assert listing_graph.weight(Edge("B", "C")) == 0
    assert listing_graph.weight(Edge("X", "Y")) == 0


def test_iteredges(listing_graph):
    assert set(listing_graph.iteredges()) == {Edge("A", "B", 5), Edge("A", "C", 7)}
    assert list(Graph().iteredges()) == []


def test_iteroutedges_and_inedges(listing_graph):
    assert set(listing_graph.iteroutedges("A")) == {Edge("A", "B", 5), Edge("A", "C", 7)}
    d = digraph(("A", "B", 1))
    assert list(d.iterinedges("A")) == []
    assert list(d.iterinedges("B")) == [Edge("A", "B", 1)]
    with pytest.raises(MissingNodeError):
        list(d.iteroutedges("Z"))


def test_degree_modes():
    u = ugraph(nodes=["lonely"])
    assert u.degree("lonely") == 0
    d = digraph((1, 2, 1))
    with pytest.raises(WrongModeError):
        d.degree(1)
    with pytest.raises(WrongModeError):
        u.indegree("lonely")
    with pytest.raises(WrongModeError):
        u.outdegree("lonely")
    assert (d.outdegree(1), d.indegree(1), d.indegree(2)) == (1, 0, 1)


def test_copy_and_equality(listing_graph):
    c = listing_graph.copy()
    assert c == listing_graph
    c.add_edge(Edge("B", "C", 1))
    assert c != listing_graph
    assert listing_graph.e() == 2


# --- Graph invariants under random operation sequences --------------------

ops = st.lists(st.tuples(st.sampled_from(["add", "del_edge", "del_node"]),
                         nodes, nodes, weights), max_size=40)


def _apply(g, seq):
    for op, s, t, w in seq:
        try:
            if op == "add":
                g.add_edge(Edge(s, t, w))
            elif op == "del_edge":
                g.del_edge(Edge(s, t, w))
            else:
                g.del_node(s)
        except (InvalidEdgeError, DuplicateEdgeError, MissingEdgeError,
                MissingNodeError):
            pass


@settings(max_examples=200)
@given(ops)
def test_undirected_invariants(seq):
    g = Graph()
    _apply(g, seq)
    assert g.e() == sum(1 for _ in g.iteredges())
    assert sum(g.degree(s) for s in g.iternodes()) == 2 * g.e()
    for s in g.iternodes():
        outs = list(g.iteroutedges(s))
        assert g.degree(s) == len(outs) == sum(1 for _ in g.iterinedges(s))
        for e in outs:
            assert g.has_edge(~e)
            assert g.weight(~e) == e.weight
            assert g.has_node(e.target)
    for e in g.iteredges():
        assert e.source < e.target


@settings(max_examples=200)
@given(ops)
def test_directed_invariants(seq):
    g = Graph(directed=True)
    _apply(g, seq)
    assert g.e() == sum(1 for _ in g.iteredges())
    assert sum(g.outdegree(s) for s in g.iternodes()) == g.e()
    assert sum(g.indegree(s) for s in g.iternodes()) == g.e()
    for s in g.iternodes():
        for e in g.iteroutedges(s):
            assert g.has_node(e.target)
