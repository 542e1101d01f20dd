import pytest

from helpers import CRITERIA
from wgraphs import Edge, Graph


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(CRITERIA):
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)


@pytest.fixture
def listing_graph():
    """Undirected A-B:5, A-C:7."""
    g = Graph(n=3, directed=False)
    g.add_edge(Edge("A", "B", 5))
    g.add_edge(Edge("A", "C", 7))
    return g
