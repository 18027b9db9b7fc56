import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from spacegraph.graphrep import AdjGraph

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, directed=None, max_n=30, max_m=90, self_loops=True):
    """Edge lists drawn directly, independent of the seeded generators."""
    if directed is None:
        directed = draw(st.booleans())
    n = draw(st.integers(1, max_n))
    vertex = st.integers(0, n - 1)
    edge = st.tuples(vertex, vertex)
    if not self_loops:
        edge = edge.filter(lambda e: e[0] != e[1])
    edges = draw(st.lists(edge, max_size=max_m)) if (self_loops or n > 1) else []
    return AdjGraph.from_edges(n, edges, directed)


@pytest.fixture
def acceptance_report():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
