import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import digraph, ugraph
from wgraphs import Edge, Graph, topological_sort
from wgraphs.exceptions import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    FormatError,
    InstanceTooLargeError,
    InvalidEdgeError,
    InvalidSpecError,
    UnknownAlgorithmError,
)
from wgraphs.harness.bench import (
    CSV_HEADER,
    BenchRecord,
    bench,
    fit_slope,
    records_from_csv,
    records_to_csv,
)
from wgraphs.harness.edgelist import parse_edge_list, write_edge_list
from wgraphs.harness.generators import (
    MODELS,
    GeneratorSpec,
    apply_potentials,
    generate,
    plant_negative_cycle,
    random_tree_pairs,
)
from wgraphs.harness.oracles import (
    oracle_mst_weight,
    oracle_shortest_path,
)
from wgraphs.harness.verify import verify


def connected(g):
    nodes = list(g.iternodes())
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        for t in g.neighbors(stack.pop()):
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return len(seen) == len(nodes)


# --- generators -------------------------------------------------------------

def test_complete_graph_counts():
    assert generate(GeneratorSpec("complete", n=4)).e() == 6
    assert generate(GeneratorSpec("complete", n=4, directed=True)).e() == 12


def test_random_connected_is_connected():
    for seed in range(50):
        g = generate(GeneratorSpec("random-connected", n=10, density=0.0, seed=seed))
        assert connected(g)
        assert g.e() >= 9


def test_tree_plus_edges_count():
    g = generate(GeneratorSpec("tree-plus-edges", n=10, density=0.25, seed=1))
    assert connected(g)
    assert g.e() == 9 + round(0.25 * (45 - 9))


def test_dag_is_acyclic():
    g = generate(GeneratorSpec("dag", n=10, density=0.7, directed=True, seed=42))
    assert len(topological_sort(g)) == 10


def test_random_tree_pairs_make_trees():
    rng = random.Random(0)
    for n in range(1, 30):
        pairs = random_tree_pairs(n, rng)
        assert len(pairs) == max(n - 1, 0)
        g = ugraph(*[(a, b, 1) for a, b in pairs], nodes=range(n))
        assert connected(g)


def test_pruefer_trees_are_uniform():
    # Cayley: 16 labelled trees on 4 nodes, each equally likely
    rng = random.Random(5)
    counts = {}
    for _ in range(16000):
        key = frozenset(frozenset(p) for p in random_tree_pairs(4, rng))
        counts[key] = counts.get(key, 0) + 1
    assert len(counts) == 16
    assert all(800 < c < 1200 for c in counts.values())


@pytest.mark.parametrize("model", MODELS)
def test_determinism(model):
    spec = GeneratorSpec(model, n=9, density=0.4, directed=model in ("dag", "random-gnp", "complete"),
                         seed=123)
    assert generate(spec) == generate(spec)


def test_distinct_weights():
    g = generate(GeneratorSpec("complete", n=8, weights=(1, 28), distinct=True))
    ws = [e.weight for e in g.iteredges()]
    assert sorted(ws) == list(range(1, 29))
    with pytest.raises(InvalidSpecError):
        generate(GeneratorSpec("complete", n=8, weights=(1, 10), distinct=True))


def test_float_weights_in_range():
    g = generate(GeneratorSpec("complete", n=6, weights=(-1.5, 2.5), integer=False))
    assert all(-1.5 <= e.weight <= 2.5 for e in g.iteredges())


@pytest.mark.parametrize("spec", [
    GeneratorSpec("nope"),
    GeneratorSpec(n=0),
    GeneratorSpec(density=1.5),
    GeneratorSpec(weights=(5, 1)),
    GeneratorSpec("dag", directed=False),
    GeneratorSpec("random-connected", directed=True),
])
def test_invalid_specs(spec):
    with pytest.raises(InvalidSpecError):
        generate(spec)


def test_potentials_keep_cycle_weights():
    base = generate(GeneratorSpec("complete", n=5, weights=(0, 5), directed=True))
    g = apply_potentials(base, spread=20, seed=3)
    assert any(e.weight < 0 for e in g.iteredges())
    for a, b, c in [(0, 1, 2), (1, 3, 4), (4, 2, 0)]:
        def cyc(h):
            return h.weight(Edge(a, b)) + h.weight(Edge(b, c)) + h.weight(Edge(c, a))
        assert cyc(g) == cyc(base)


def test_planted_cycle_is_negative():
    base = generate(GeneratorSpec("random-gnp", n=6, density=0.3, weights=(0, 9),
                                  directed=True, seed=2))
    g = plant_negative_cycle(base, seed=2, length=3)
    changed = [e for e in g.iteredges() if base.weight(e) != e.weight or not base.has_edge(e)]
    assert changed


# --- edge-list format -------------------------------------------------------

def test_parse_listing_graph(listing_graph):
    g = parse_edge_list("directed 0\nA B 5\nA C 7\n")
    assert g == listing_graph


def test_parse_empty_directed():
    g = parse_edge_list(b"directed 1\n")
    assert g.is_directed() and g.v() == 0


def test_parse_comments_nodes_and_numbers():
    g = parse_edge_list("# header comment\n\ndirected 1\n1 2 -2.5  # arc\nnode lonely\n")
    assert set(g.iternodes()) == {1, 2, "lonely"}
    assert g.weight(Edge(1, 2)) == -2.5


@pytest.mark.parametrize("text,lineno", [
    ("", None),
    ("directed 2\n", 1),
    ("directed 0\nA B\n", 2),
    ("directed 0\nA B x\n", 2),
    ("\n\ndirected 1\nA B 1 2\n", 4),
])
def test_malformed(text, lineno):
    with pytest.raises(FormatError) as info:
        parse_edge_list(text)
    assert info.value.lineno == lineno


def test_loop_and_duplicate_errors_propagate():
    with pytest.raises(InvalidEdgeError):
        parse_edge_list("directed 1\nA A 1\n")
    with pytest.raises(DuplicateEdgeError):
        parse_edge_list("directed 0\nA B 1\nB A 1\n")


def test_round_trip_random_graphs():
    rng = random.Random(9)
    for seed in range(100):
        model = rng.choice(MODELS)
        directed = model in ("dag",) or (model in ("random-gnp", "complete") and rng.random() < 0.5)
        spec = GeneratorSpec(model, n=rng.randint(1, 12), density=rng.uniform(0, 1),
                             weights=(-50, 50), integer=rng.random() < 0.5,
                             directed=directed, seed=seed)
        g = generate(spec)
        assert parse_edge_list(write_edge_list(g)) == g


def test_round_trip_isolated_nodes_and_labels():
    g = digraph(("a", "b", 0.1), nodes=["z"])
    assert parse_edge_list(write_edge_list(g)) == g


# --- oracles ----------------------------------------------------------------

def test_oracle_shortest_path():
    g = digraph(("A", "B", 5), ("B", "C", 1), ("A", "C", 7), nodes=["Z"])
    assert oracle_shortest_path(g, "A", "C") == 6
    assert oracle_shortest_path(g, "B", "B") == 0
    assert oracle_shortest_path(g, "A", "Z") == math.inf


def test_oracle_path_size_limit():
    g = Graph(directed=True)
    for i in range(13):
        g.add_node(i)
    with pytest.raises(InstanceTooLargeError):
        oracle_shortest_path(g, 0, 1)


def test_oracle_mst(listing_graph):
    assert oracle_mst_weight(listing_graph) == 12
    assert oracle_mst_weight(ugraph(("a", "b", 1), ("b", "c", 2), ("a", "c", 3))) == 3
    tree = ugraph((1, 2, 4), (2, 3, -1), (2, 4, 6))
    assert oracle_mst_weight(tree) == 9


def test_oracle_mst_errors():
    with pytest.raises(DisconnectedGraphError):
        oracle_mst_weight(ugraph(("a", "b", 1), nodes=["c"]))
    with pytest.raises(InstanceTooLargeError):
        oracle_mst_weight(generate(GeneratorSpec("complete", n=9)))


# --- bench ------------------------------------------------------------------

def test_bench_record_count_and_fields():
    recs = bench("kruskal", [12], 3, GeneratorSpec("complete"))
    assert len(recs) == 3
    assert [r.trial for r in recs] == [0, 1, 2]
    assert all(r.v == 12 and r.e == 66 and r.wall_time > 0 for r in recs)


def test_bench_unknown_algorithm():
    with pytest.raises(UnknownAlgorithmError):
        bench("quicksort", [5], 1, GeneratorSpec("complete"))


def test_bench_sizes_ascending():
    with pytest.raises(ValueError):
        bench("kruskal", [20, 10], 1, GeneratorSpec("complete"))


def test_fit_slope_on_synthetic_records():
    recs = [BenchRecord("x", v, 0, k, 0, 3e-7 * v ** 2.5 * (1 + 0.01 * k))
            for v in (10, 20, 40, 80) for k in range(3)]
    assert fit_slope(recs) == pytest.approx(2.5, abs=1e-9)


@settings(max_examples=50)
@given(st.lists(st.builds(BenchRecord, st.sampled_from(["dijkstra", "prim"]),
                          st.integers(1, 10**4), st.integers(0, 10**6),
                          st.integers(0, 50), st.integers(0, 2**31),
                          st.floats(1e-9, 1e3)), max_size=20))
def test_csv_round_trip(records):
    text = records_to_csv(records)
    assert text.splitlines()[0] == ",".join(CSV_HEADER)
    assert records_from_csv(text) == records


def test_dijkstra_matrix_scaling_example():
    recs = bench("dijkstra_matrix", [50, 100, 200, 400], 3, GeneratorSpec("complete"))
    assert 1.7 <= fit_slope(recs) <= 2.3


def test_bellman_ford_full_scaling_example():
    recs = bench("bellman_ford_full", [40, 80, 160, 320], 1, GeneratorSpec("complete"))
    assert 2.6 <= fit_slope(recs) <= 3.4


# --- verify -----------------------------------------------------------------

@pytest.mark.parametrize("suite,max_n", [("mst", 7), ("sssp", 8), ("apsp", 7)])
def test_verify_suites_pass(suite, max_n):
    report = verify(suite, 15, max_n, seed=4)
    assert report.ok, report.failures
    assert report.instances == 15 and report.checks > 0


def test_verify_reports_failures(monkeypatch):
    from wgraphs import mst
    from wgraphs.mst import MstResult

    monkeypatch.setattr(mst, "kruskal_mst", lambda g: MstResult(total_weight=-1))
    report = verify("mst", 3, 5, seed=0)
    assert not report.ok
    assert report.summary().startswith("FAIL")


def test_verify_bad_suite():
    with pytest.raises(InvalidSpecError):
        verify("flow", 1, 5, 0)
