# Four MST algorithms on the same random graphs.
import time

from wgraphs import boruvka_mst, kruskal_mst, prim_matrix_mst, prim_mst
from wgraphs.harness import GeneratorSpec, generate, oracle_mst_weight

small = generate(GeneratorSpec("random-connected", n=7, density=0.4,
                               weights=(1, 50), distinct=True, seed=1))
print("brute force:", oracle_mst_weight(small))
for algo in (boruvka_mst, prim_mst, prim_matrix_mst, kruskal_mst):
    r = algo(small)
    print(f"{algo.__name__:16s} {r.total_weight:6.0f}", sorted(r.edges()))

# Boruvka halves the number of components per phase
big = generate(GeneratorSpec("random-connected", n=500, density=0.02, seed=2))
print("boruvka phases on 500 nodes:", boruvka_mst(big).phases)

# Prim with a heap suits sparse graphs, the matrix version dense ones
for density in (0.02, 1.0):
    g = generate(GeneratorSpec("random-connected", n=300, density=density, seed=3))
    for algo in (prim_mst, prim_matrix_mst):
        t0 = time.perf_counter()
        algo(g)
        print(f"e={g.e():6d} {algo.__name__:16s} {time.perf_counter() - t0:.4f}s")
