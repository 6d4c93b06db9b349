from hypothesis import strategies as st

from domiperf.graph import Graph, build_graph
from domiperf.patterns import pattern_by_name


@st.composite
def graphs(draw, min_n=0, max_n=8):
    """Random simple graph on up to max_n vertices."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return build_graph(n, [])
    edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    return build_graph(n, edges)


def pattern_graph(name: str) -> Graph:
    return pattern_by_name(name).graph()
