import itertools

import networkx as nx
import pytest
from hypothesis import given

from totalgroup.catalog import (cube, dodecahedron, friendship, outerplanar_catalog, plane_fan,
                                triforce)
from totalgroup.graph import (build_graph, complete, complete_bipartite, cycle, path, prism,
                              star, wheel)
from totalgroup.structure import (MINORS, SizeExceeded, cycles_of_length,
                                  find_2_alternating_cycle, find_knet, find_light_edge, girth,
                                  has_cycle_len, has_k4_minor_by_reduction, has_minor,
                                  has_minor_by_search, outerplanar_configuration, triangles)

from strategies import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def is_outerplanar_nx(g):
    h = to_nx(g)
    h.add_edges_from(("apex", v) for v in range(g.n))
    return nx.check_planarity(h)[0]


def test_cycle_lengths():
    c5 = cycle(5)
    assert has_cycle_len(c5, 5) and not has_cycle_len(c5, 4)
    assert len(list(cycles_of_length(complete(4), 3))) == 4
    assert len(list(cycles_of_length(complete(4), 4))) == 3


def test_girth():
    assert girth(cube().graph) == 4
    assert girth(dodecahedron().graph) == 5
    assert girth(complete(3)) == 3
    assert girth(path(5)) == float("inf")


def test_dodecahedron_cycles():
    g = dodecahedron().graph
    assert not has_cycle_len(g, 4) and has_cycle_len(g, 5)


@given(graphs(max_n=7))
def test_cycle_counts_match_networkx(g):
    h = to_nx(g)
    for k in (3, 4, 5):
        ours = len(list(cycles_of_length(g, k)))
        theirs = sum(1 for c in nx.simple_cycles(h, length_bound=k) if len(c) == k)
        assert ours == theirs


def test_knet():
    g = build_graph(5, list(cycle(5).edges) + [(0, 2)])
    cyc, chord = find_knet(g, 5)
    assert len(cyc) == 5 and chord == (0, 2) or chord == (2, 0)
    assert find_knet(complete(4), 5) is None
    assert find_knet(complete(4), 4) is not None
    assert find_knet(cycle(5), 5) is None
    with pytest.raises(ValueError):
        find_knet(g, 3)
    with pytest.raises(SizeExceeded):
        find_knet(g, 9)


def test_two_alternating_cycle():
    cyc = find_2_alternating_cycle(complete_bipartite(2, 3))
    g = complete_bipartite(2, 3)
    assert cyc is not None and len(cyc) % 2 == 0
    degs = [g.degree(v) for v in cyc]
    assert all(d == 2 for d in degs[::2]) or all(d == 2 for d in degs[1::2])
    assert find_2_alternating_cycle(complete(4)) is None


def test_light_edges():
    assert find_light_edge(complete(8), "sum13") is None
    assert find_light_edge(complete(7), "sum13") == (0, 1)
    assert find_light_edge(cube().graph, "sum13") is not None
    assert find_light_edge(dodecahedron().graph, "deg3_le5") is not None
    assert find_light_edge(complete(6), "deg3_le5") is None
    with pytest.raises(ValueError):
        find_light_edge(cube().graph, "nope")


@pytest.mark.parametrize("make,tag", [
    (lambda: path(4), "a"),
    (lambda: cycle(6), "b"),
    (lambda: plane_fan(3), "c"),
    (triforce, "d"),
])
def test_outerplanar_configurations(make, tag):
    assert outerplanar_configuration(make()).tag == tag


def test_configuration_d_vertices():
    conf = outerplanar_configuration(triforce())
    x, u1, v1, u2, v2 = conf.vertices
    g = triforce().graph
    assert g.degree(x) == 4 and g.degree(u1) == g.degree(u2) == 2


@pytest.mark.parametrize("name", sorted(outerplanar_catalog()))
def test_outerplanar_catalog_has_a_configuration(name):
    pg = outerplanar_catalog()[name]
    assert is_outerplanar_nx(pg.graph)
    assert outerplanar_configuration(pg).tag != "none"


@pytest.mark.parametrize("g,k4,k23", [
    (complete(4), True, False),
    (wheel(4), True, True),
    (complete_bipartite(2, 3), False, True),
    (cycle(7), False, False),
    (star(4), False, False),
    (friendship(3).graph, False, False),
    (prism(3), True, True),
    (cube().graph, True, True),
])
def test_minor_examples(g, k4, k23):
    assert has_minor(g, "K4") == k4
    assert has_minor(g, "K23") == k23


@given(graphs(max_n=7))
def test_minor_tests_match_search(g):
    for h in MINORS:
        assert has_minor(g, h) == has_minor_by_search(g, h)


@given(graphs(max_n=9))
def test_outerplanarity_matches_networkx(g):
    expected = is_outerplanar_nx(g)
    assert (not has_minor(g, "K4") and not has_minor(g, "K23")) == expected


@given(graphs(max_n=9))
def test_k23_free_implies_k2bar_plus_free(g):
    if not has_minor(g, "K23"):
        assert not has_minor(g, "K2bar_plus")
    assert has_minor(g, "K4") == has_k4_minor_by_reduction(g)


def test_size_cap():
    with pytest.raises(SizeExceeded):
        has_minor(cycle(20), "K4", size_cap=10)


def test_triangles():
    assert len(triangles(complete(4))) == 4
    assert triangles(cube().graph) == []
