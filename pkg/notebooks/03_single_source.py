# Single-source shortest paths, negative arcs and negative cycles.
from wgraphs import Edge, Graph, bellman_ford, dag_shortest_path, dijkstra
from wgraphs.exceptions import NegativeCycleError, NegativeWeightError

G = Graph(directed=True)
for s, t, w in [("A", "B", 5), ("B", "C", 1), ("A", "C", 7), ("C", "D", 2)]:
    G.add_edge(Edge(s, t, w))

r = dijkstra(G, "A")
print(r.distance, "settled", r.order)
print("path to D:", r.path("D"))

# Dijkstra refuses a negative arc, Bellman-Ford copes
G.add_edge(Edge("B", "D", -4))
try:
    dijkstra(G, "A")
except NegativeWeightError as exc:
    print("dijkstra:", exc)
print("bellman_ford:", bellman_ford(G, "A").distance)

# this graph is acyclic, so one pass in topological order is enough
print("dag:", dag_shortest_path(G, "A").distance)

G.add_edge(Edge("D", "B", 1))     # B -> D -> B weighs -3
try:
    bellman_ford(G, "A")
except NegativeCycleError as exc:
    print("bellman_ford:", exc)
