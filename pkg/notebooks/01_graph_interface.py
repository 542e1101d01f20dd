# Building graphs by hand and poking at the interface.
from wgraphs import Edge, Graph

G = Graph(n=3)             # undirected, n is only a size hint
G.add_edge(Edge("A", "B", 5))
G.add_edge(Edge("A", "C", 7))
print(G.is_directed(), G.v(), G.e())

degrees = sorted((G.degree(v) for v in G.iternodes()), reverse=True)
print("degree sequence", degrees)
print("leaves", sorted(v for v in G.iternodes() if G.degree(v) == 1))
print("weight", sum(e.weight for e in G.iteredges()))

# an undirected edge has two representatives, iteredges yields source < target
e = Edge("C", "A", 7)
print(G.has_edge(e), G.has_edge(~e), list(G.iteredges()))

# edges sort by weight first, then by endpoints
print(sorted([Edge("x", "y", 2), Edge("a", "b", 2), Edge("z", "a", 1)]))

D = Graph(directed=True)
D.add_edge(Edge(1, 2, 3))
D.add_edge(Edge(2, 3, -1))
print("out of 2:", list(D.iteroutedges(2)), "into 2:", list(D.iterinedges(2)))
print("indegree/outdegree of 2:", D.indegree(2), D.outdegree(2))

# the same graphs round-trip through the plain-text edge-list format
from wgraphs.harness import parse_edge_list, write_edge_list

text = write_edge_list(D)
print(text)
assert parse_edge_list(text) == D
