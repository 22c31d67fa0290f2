import networkx as nx
import pytest
from hypothesis import given

from totalgroup.derived import total_graph
from totalgroup.graph import (GraphError, build_graph, complete, complete_bipartite, cycle, path,
                              theta, wheel)
from totalgroup.ordering import (back_degrees, blocks, coloring_number, d_group_choosable_oracle,
                                 prune_core)

from strategies import graphs


def _nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


@pytest.mark.parametrize("n", [6, 7, 8])
def test_col_of_total_wheel(n):
    assert coloring_number(total_graph(wheel(n)).graph).col == n + 1


def test_col_small():
    assert coloring_number(path(5)).col == 2
    assert coloring_number(cycle(5)).col == 3
    assert coloring_number(complete(5)).col == 5
    assert coloring_number(total_graph(path(6)).graph).col == 3


@given(graphs())
def test_col_is_max_core_plus_one(g):
    cert = coloring_number(g)
    core = max(nx.core_number(_nx(g)).values(), default=-1)
    assert cert.col == core + 1
    assert max(back_degrees(g, cert.ordering), default=-1) == cert.col - 1
    assert list(cert.back_degrees) == back_degrees(g, cert.ordering)


def test_blocks_examples():
    bowtie = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    dec = blocks(bowtie)
    assert sorted(map(sorted, dec.blocks)) == [[0, 1, 2], [2, 3, 4]]
    assert dec.cut_vertices == {2}
    dec = blocks(path(4))
    assert len(dec.blocks) == 3 and dec.cut_vertices == {1, 2}
    assert blocks(build_graph(2, [])).blocks == (frozenset([0]), frozenset([1]))


@given(graphs())
def test_blocks_match_networkx(g):
    G = _nx(g)
    theirs = sorted(sorted(c) for c in nx.biconnected_components(G))
    isolated = [[v] for v in range(g.n) if g.degree(v) == 0]
    ours = sorted(sorted(b) for b in blocks(g).blocks)
    assert ours == sorted(theirs + isolated)
    assert blocks(g).cut_vertices == set(nx.articulation_points(G))


def test_d_oracle():
    assert not d_group_choosable_oracle(complete(4))
    assert not d_group_choosable_oracle(cycle(5))
    assert d_group_choosable_oracle(build_graph(4, [e for e in complete(4).edges if e != (0, 1)]))
    assert d_group_choosable_oracle(complete_bipartite(2, 3))
    with pytest.raises(GraphError):
        d_group_choosable_oracle(build_graph(3, [(0, 1)]))


def test_prune_core_shapes():
    assert prune_core(theta(2)).shape == "Theta2,2,4"
    c6_tail = build_graph(7, list(cycle(6).edges) + [(0, 6)])
    assert prune_core(c6_tail).shape == "C6"
    assert prune_core(path(5)).shape == "K1"
    assert prune_core(cycle(5)).shape == "other"
    assert prune_core(complete_bipartite(2, 3)).shape == "Theta2,2,2"
    assert not prune_core(complete(4)).two_choosable_shape
