"""Weighted graph algorithms on a dict-of-dicts graph.

Minimum spanning trees, single-source and all-pairs shortest paths over a
small graph interface (:class:`Graph`, :class:`Edge`).
"""

from wgraphs.apsp import (
    faster_all_pairs,
    floyd_warshall,
    johnson,
    min_plus_product,
    reconstruct_path_apsp,
    slow_all_pairs,
)
from wgraphs.edges import Edge
from wgraphs.exceptions import *  # noqa: F401,F403
from wgraphs.graphs import Graph
from wgraphs.mst import (
    MstResult,
    boruvka_mst,
    kruskal_mst,
    prim_matrix_mst,
    prim_mst,
)
from wgraphs.sssp import (
    SsspResult,
    bellman_ford,
    dag_shortest_path,
    dijkstra,
    dijkstra_matrix,
    reconstruct_path,
    relax,
)
from wgraphs.topsort import topological_sort
from wgraphs.unionfind import UnionFind

__version__ = "0.1.0"
