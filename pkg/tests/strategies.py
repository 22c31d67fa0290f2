"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from totalgroup.graph import build_graph


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    if connected:
        # hang every vertex off an earlier one so the graph is connected
        parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
        chosen = sorted(set(chosen) | {(p, v) for v, p in zip(range(1, n), parents)})
    return build_graph(n, chosen)
