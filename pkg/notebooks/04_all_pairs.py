# All-pairs distances four ways, shown as numpy arrays.
import numpy as np

from wgraphs import apsp
from wgraphs.harness import GeneratorSpec, generate
from wgraphs.harness.generators import apply_potentials

base = generate(GeneratorSpec("random-gnp", n=6, density=0.4, weights=(0, 9),
                              directed=True, seed=4))
G = apply_potentials(base, spread=6, seed=4)     # negative arcs, no negative cycles
print("arc weights:", sorted(e.weight for e in G.iteredges()))

np.set_printoptions(linewidth=120)
d, parent = apsp.floyd_warshall(G)
arr, nodes = apsp.to_array(d)
print(nodes)
print(arr)

for name in ("johnson", "slow_all_pairs", "faster_all_pairs"):
    other, _ = apsp.to_array(getattr(apsp, name)(G), nodes)
    print(name, "matches:", np.array_equal(arr, other))

# Johnson shifts weights with potentials h so every arc is >= 0
reweighted, h = apsp.johnson_reweight(G)
print("h =", h)
print("min reweighted arc:", min(e.weight for e in reweighted.iteredges()))

s, t = np.unravel_index(np.argmax(np.where(np.isfinite(arr), arr, -np.inf)), arr.shape)
print("longest finite distance", nodes[s], "->", nodes[t], "=", arr[s, t],
      "via", apsp.reconstruct_path_apsp(parent, nodes[s], nodes[t]))
