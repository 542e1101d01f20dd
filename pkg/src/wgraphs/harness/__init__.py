"""Test and benchmark harness: generators, edge-list I/O, oracles, timing."""

from wgraphs.harness.bench import BenchRecord, fit_slope
from wgraphs.harness.edgelist import parse_edge_list, write_edge_list
from wgraphs.harness.generators import GeneratorSpec, generate
from wgraphs.harness.oracles import (
    oracle_distances,
    oracle_mst_weight,
    oracle_shortest_path,
)
