"""Plane graphs given by rotation systems, and their face walks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import Graph, build_graph


class RotationError(ValueError):
    """Rotation lists are not neighbour permutations, or do not describe a plane embedding."""


@dataclass(frozen=True)
class FaceWalk:
    darts: tuple[tuple[int, int], ...]
    vertices: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.darts)

    @property
    def multiplicity(self) -> Counter:
        """How many times the boundary walk passes through each vertex."""
        return Counter(self.vertices)

    def is_simple(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)


def trace_faces(g: Graph, rotation: Sequence[Sequence[int]]) -> list[FaceWalk]:
    """Every dart lies on exactly one face; after ``u -> v`` the walk leaves ``v``
    along the neighbour that follows ``u`` in the rotation at ``v``."""
    succ = {}
    for v in range(g.n):
        rot = list(rotation[v])
        for i, u in enumerate(rot):
            succ[(v, u)] = rot[(i + 1) % len(rot)]
    seen = set()
    faces = []
    for u, v in sorted(succ):
        if (v, u) in seen:
            continue
        start = (v, u)
        darts, verts = [], []
        d = start
        while True:
            seen.add(d)
            darts.append(d)
            verts.append(d[0])
            a, b = d
            d = (b, succ[(b, a)])
            if d == start:
                break
            if d in seen:
                raise RotationError("face walk failed to close")
        faces.append(FaceWalk(tuple(darts), tuple(verts)))
    for v in range(g.n):
        if not g.adj[v]:
            faces.append(FaceWalk((), (v,)))
    return faces


@dataclass(frozen=True, eq=False)
class PlaneGraph:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    name: str = ""
    faces: tuple[FaceWalk, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        g = self.graph
        if len(self.rotation) != g.n:
            raise RotationError("one rotation list per vertex is required")
        for v in range(g.n):
            if sorted(self.rotation[v]) != list(g.adj[v]):
                raise RotationError(f"rotation at {v} is not a permutation of its neighbours")
        faces = trace_faces(g, self.rotation)
        comps = g.components()
        # each component traces its own outer face, and isolated vertices get one
        # each, so the count of walks is F + C - 1
        if g.n - g.m + len(faces) != 2 * len(comps):
            genus_gap = 2 * len(comps) - (g.n - g.m + len(faces))
            raise RotationError(f"rotation is not planar (Euler defect {genus_gap})")
        object.__setattr__(self, "faces", tuple(faces))

    @property
    def n(self) -> int:
        return self.graph.n

    def face_count(self) -> int:
        return len(self.faces) - len(self.graph.components()) + 1

    def three_faces(self) -> list[FaceWalk]:
        return [f for f in self.faces if f.degree == 3]

    def to_json(self) -> dict:
        data = self.graph.to_json()
        data["rotation"] = [list(r) for r in self.rotation]
        if self.name:
            data["name"] = self.name
        return data


def plane_from_json(data: dict) -> PlaneGraph:
    g = build_graph(int(data["n"]), data["edges"], name=data.get("name", ""))
    if "rotation" not in data or data["rotation"] is None:
        raise RotationError("graph JSON carries no rotation")
    return PlaneGraph(g, tuple(tuple(int(x) for x in r) for r in data["rotation"]), data.get("name", ""))


def rotation_from_2d(g: Graph, coords: Sequence[Sequence[float]]) -> tuple[tuple[int, ...], ...]:
    """Counter-clockwise neighbour order of a straight-line drawing."""
    pts = np.asarray(coords, dtype=float)
    rot = []
    for v in range(g.n):
        d = pts[list(g.adj[v])] - pts[v]
        ang = np.arctan2(d[:, 1], d[:, 0])
        rot.append(tuple(int(g.adj[v][i]) for i in np.argsort(ang, kind="stable")))
    return tuple(rot)


def rotation_from_3d(g: Graph, coords: Sequence[Sequence[float]]) -> tuple[tuple[int, ...], ...]:
    """Neighbour order around each vertex of a convex polytope centred at the origin."""
    pts = np.asarray(coords, dtype=float)
    rot = []
    for v in range(g.n):
        normal = pts[v] / np.linalg.norm(pts[v])
        helper = np.array([1.0, 0.0, 0.0]) if abs(normal[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
        e1 = np.cross(normal, helper)
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(normal, e1)
        d = pts[list(g.adj[v])] - pts[v]
        ang = np.arctan2(d @ e2, d @ e1)
        rot.append(tuple(int(g.adj[v][i]) for i in np.argsort(ang, kind="stable")))
    return tuple(rot)


def plane_from_coords(g: Graph, coords, name: str = "") -> PlaneGraph:
    dim = len(coords[0]) if len(coords) else 2
    rot = rotation_from_2d(g, coords) if dim == 2 else rotation_from_3d(g, coords)
    return PlaneGraph(g, rot, name or g.name)


def tree_plane(g: Graph, name: str = "") -> PlaneGraph:
    """Any rotation of a forest is planar; use the sorted neighbour lists."""
    return PlaneGraph(g, tuple(tuple(a) for a in g.adj), name or g.name)


def subdivide(pg: PlaneGraph, name: str = "") -> PlaneGraph:
    """Insert a new vertex ``n + e`` on every edge ``e``; the rotation carries over."""
    g = pg.graph
    edges = []
    for e, (u, v) in enumerate(g.edges):
        edges += [(u, g.n + e), (g.n + e, v)]
    sg = build_graph(g.n + g.m, edges, name=name or (f"S({g.name})" if g.name else ""))
    rot = [tuple(g.n + g.edge_index(v, u) for u in pg.rotation[v]) for v in range(g.n)]
    rot += [(u, v) for (u, v) in g.edges]
    return PlaneGraph(sg, tuple(rot), sg.name)
