import pytest
from hypothesis import given, strategies as st

from totalgroup.catalog import cube, dodecahedron, plane_catalog, tetrahedron
from totalgroup.graph import build_graph, cycle, path, random_tree, star
from totalgroup.plane import (PlaneGraph, RotationError, plane_from_json, subdivide,
                              trace_faces, tree_plane)


def test_cube_faces():
    pg = cube()
    assert pg.graph.n == 8 and pg.graph.m == 12
    assert sorted(f.degree for f in pg.faces) == [4] * 6


def test_dodecahedron_faces():
    pg = dodecahedron()
    assert sorted(f.degree for f in pg.faces) == [5] * 12


def test_tree_has_one_face_walking_every_edge_twice():
    g = random_tree(9, seed=2)
    pg = tree_plane(g)
    assert len(pg.faces) == 1 and pg.faces[0].degree == 2 * g.m


def test_star_hub_multiplicity():
    pg = tree_plane(star(3))
    (face,) = pg.faces
    assert face.multiplicity[0] == 3 and not face.is_simple()


def test_cycle_two_faces():
    pg = tree_plane(path(4))
    assert pg.face_count() == 1
    pg = plane_catalog()["cycle5"]
    assert [f.degree for f in pg.faces] == [5, 5]


@pytest.mark.parametrize("name", sorted(plane_catalog()))
def test_euler_and_degree_sum(name):
    pg = plane_catalog()[name]
    g = pg.graph
    assert g.n - g.m + pg.face_count() == 1 + len(g.components())
    assert sum(f.degree for f in pg.faces) == 2 * g.m


def test_rotation_errors():
    g = cycle(3)
    with pytest.raises(RotationError):
        PlaneGraph(g, ((1, 2), (0, 2)))
    with pytest.raises(RotationError):
        PlaneGraph(g, ((1, 2), (0, 0), (0, 1)))
    # K4 with a twisted rotation at one vertex traces a torus
    k4 = tetrahedron()
    rot = list(k4.rotation)
    rot[0] = (rot[0][1], rot[0][0], rot[0][2])
    with pytest.raises(RotationError):
        PlaneGraph(k4.graph, tuple(rot))


def test_json_roundtrip():
    pg = cube()
    back = plane_from_json(pg.to_json())
    assert back.rotation == pg.rotation and back.graph.edges == pg.graph.edges
    with pytest.raises(RotationError):
        plane_from_json(pg.graph.to_json())


def test_subdivide_doubles_face_degrees():
    sc = subdivide(cube())
    assert sc.graph.n == 20 and sc.graph.m == 24
    assert sorted(f.degree for f in sc.faces) == [8] * 6


@given(st.integers(2, 12), st.integers(0, 100))
def test_forest_any_rotation_is_planar(n, seed):
    g = random_tree(n, seed)
    faces = trace_faces(g, g.adj)
    assert len(faces) == 1


def test_isolated_vertex_gets_its_own_walk():
    g = build_graph(3, [(0, 1)])
    pg = tree_plane(g)
    assert pg.face_count() == 1 and len(pg.faces) == 2
