from wgraphs import Edge, Graph

CRITERIA = []


def record_criterion(number, title, passed, detail=""):
    CRITERIA.append((number, title, passed, detail))


def digraph(*arcs, nodes=()):
    g = Graph(directed=True)
    for node in nodes:
        g.add_node(node)
    for s, t, w in arcs:
        g.add_edge(Edge(s, t, w))
    return g


def ugraph(*edges, nodes=()):
    g = Graph()
    for node in nodes:
        g.add_node(node)
    for s, t, w in edges:
        g.add_edge(Edge(s, t, w))
    return g
