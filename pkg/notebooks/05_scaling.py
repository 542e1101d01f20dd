# Timing growth on complete graphs, fitted as a log-log slope.
import numpy as np

from wgraphs.harness import GeneratorSpec, fit_slope
from wgraphs.harness.bench import bench, records_to_csv

template = GeneratorSpec("complete", seed=0)
for algo, sizes, theory in [("dijkstra_matrix", [50, 100, 200], 2),
                            ("prim_matrix", [50, 100, 200], 2),
                            ("kruskal", [50, 100, 200], 2),
                            ("floyd_warshall", [20, 40, 80], 3)]:
    records = bench(algo, sizes, 3, template)
    medians = [np.median([r.wall_time for r in records if r.v == v]) for v in sizes]
    print(f"{algo:16s} slope {fit_slope(records):.2f} (theory ~{theory})",
          " ".join(f"{m * 1e3:.2f}ms" for m in medians))

# CSV is the hand-off point for plotting elsewhere
print(records_to_csv(records).splitlines()[:3])
