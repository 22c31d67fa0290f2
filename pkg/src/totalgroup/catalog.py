"""Named graphs: plane drawings, outerplanar graphs and exhaustive small-graph lists."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Callable, Iterable

import numpy as np

from .graph import (Graph, build_graph, complete, complete_bipartite, cycle, fan, path,
                    prism, random_tree, star, theta, wheel)
from .plane import PlaneGraph, plane_from_coords, subdivide, tree_plane

PHI = (1 + math.sqrt(5)) / 2


def _unit_distance_graph(pts: np.ndarray, name: str) -> Graph:
    """Join the pairs at minimum distance (all polytopes used here are edge-uniform)."""
    d = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
    short = d[d > 1e-9].min()
    edges = [(i, j) for i, j in itertools.combinations(range(len(pts)), 2)
             if abs(d[i, j] - short) < 1e-6]
    return build_graph(len(pts), edges, name=name)


def _polytope(pts, name: str) -> PlaneGraph:
    pts = np.asarray(pts, dtype=float)
    pts = pts - pts.mean(axis=0)
    return plane_from_coords(_unit_distance_graph(pts, name), pts, name)


def _signs(*coords):
    """All sign choices of the nonzero coordinates."""
    out = set()
    for signs in itertools.product((1, -1), repeat=len(coords)):
        out.add(tuple(s * c for s, c in zip(signs, coords)))
    return sorted(out)


def _cyclic(p):
    x, y, z = p
    return [(x, y, z), (z, x, y), (y, z, x)]


def tetrahedron() -> PlaneGraph:
    return _polytope([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)], "tetrahedron")


def cube() -> PlaneGraph:
    return _polytope(list(itertools.product((-1, 1), repeat=3)), "cube")


def octahedron() -> PlaneGraph:
    pts = [tuple(s * (i == j) for j in range(3)) for i in range(3) for s in (1, -1)]
    return _polytope(pts, "octahedron")


def icosahedron() -> PlaneGraph:
    pts = [q for p in _signs(0, 1, PHI) for q in _cyclic(p)]
    return _polytope(sorted(set(pts)), "icosahedron")


def dodecahedron() -> PlaneGraph:
    pts = list(itertools.product((-1, 1), repeat=3))
    pts += [q for p in _signs(0, 1 / PHI, PHI) for q in _cyclic(p)]
    return _polytope(sorted(set(pts)), "dodecahedron")


def truncated_tetrahedron() -> PlaneGraph:
    pts = set()
    for perm in set(itertools.permutations((3, 1, 1))):
        for signs in itertools.product((1, -1), repeat=3):
            if np.prod(signs) > 0:
                pts.add(tuple(s * c for s, c in zip(signs, perm)))
    return _polytope(sorted(pts), "truncated_tetrahedron")


# -- straight-line drawings -------------------------------------------------


def _circle(k: int, radius: float = 1.0, phase: float = 0.0) -> list[tuple[float, float]]:
    return [(radius * math.cos(phase + 2 * math.pi * i / k),
             radius * math.sin(phase + 2 * math.pi * i / k)) for i in range(k)]


def plane_cycle(n: int) -> PlaneGraph:
    return plane_from_coords(cycle(n), _circle(n))


def plane_wheel(n: int) -> PlaneGraph:
    return plane_from_coords(wheel(n), _circle(n) + [(0.0, 0.0)])


def plane_fan(n: int) -> PlaneGraph:
    """Path on the upper half circle, apex below the centre."""
    pts = [(math.cos(math.pi * (i + 1) / (n + 1)), math.sin(math.pi * (i + 1) / (n + 1)))
           for i in range(n)]
    return plane_from_coords(fan(n), pts + [(0.0, -0.5)])


def plane_prism(n: int) -> PlaneGraph:
    return plane_from_coords(prism(n), _circle(n, 2.0) + _circle(n, 1.0))


def plane_bipartite_2(k: int) -> PlaneGraph:
    """K_{2,k}: the two hubs above and below a row of k vertices."""
    pts = [(0.0, 1.0), (0.0, -1.0)] + [(i - (k - 1) / 2, 0.0) for i in range(k)]
    return plane_from_coords(complete_bipartite(2, k), pts)


def plane_theta(m: int) -> PlaneGraph:
    g = theta(m)
    end = 2 * m
    pts = [(math.cos(math.pi * i / end), -math.sin(math.pi * i / end)) for i in range(end + 1)]
    pts += [(0.0, 0.3), (0.0, 0.8)]
    # long path on the lower half circle from (1,0) to (-1,0); middles above
    return plane_from_coords(g, pts)


def friendship(k: int) -> PlaneGraph:
    """k triangles sharing the centre vertex 0."""
    edges, pts = [], [(0.0, 0.0)]
    for t in range(k):
        a, b = 1 + 2 * t, 2 + 2 * t
        edges += [(0, a), (0, b), (a, b)]
        ang = 2 * math.pi * t / k
        width = math.pi / (2 * k)
        pts += [(math.cos(ang - width), math.sin(ang - width)),
                (math.cos(ang + width), math.sin(ang + width))]
    return plane_from_coords(build_graph(2 * k + 1, edges, name=f"friendship{k}"), pts)


def triangle_with_pendants() -> PlaneGraph:
    edges = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]
    pts = [(0.0, 1.0), (-1.0, -0.5), (1.0, -0.5), (0.0, 2.0), (-2.0, -1.0), (2.0, -1.0)]
    return plane_from_coords(build_graph(6, edges, name="triangle+pendants"), pts)


def polygon_with_chords(n: int, chords: Iterable[tuple[int, int]], name: str) -> PlaneGraph:
    """Outerplanar graph: an n-gon in convex position plus non-crossing chords."""
    edges = [(i, (i + 1) % n) for i in range(n)] + list(chords)
    return plane_from_coords(build_graph(n, edges, name=name), _circle(n))


def zigzag_triangulation(n: int) -> PlaneGraph:
    """Maximal outerplanar graph whose inner dual is a path (the zigzag strip)."""
    chords, lo, hi = [], 0, n - 1
    left = True
    while hi - lo > 2:
        if left:
            chords.append((lo + 1, hi))
            lo += 1
        else:
            chords.append((lo, hi - 1))
            hi -= 1
        left = not left
    return polygon_with_chords(n, chords, f"zigzag{n}")


def triforce() -> PlaneGraph:
    """Triangle with an ear on every side; the only reducible configuration is (d)."""
    return polygon_with_chords(6, [(0, 2), (2, 4), (0, 4)], "triforce")


def random_outerplanar(n: int, seed: int, keep: float = 0.6) -> PlaneGraph:
    """Seeded random triangulation of the n-gon, each chord kept with probability ``keep``."""
    rng = np.random.default_rng(seed)
    chords = []
    stack = [(0, n - 1)]
    while stack:
        lo, hi = stack.pop()
        if hi - lo < 2:
            continue
        apex = int(rng.integers(lo + 1, hi))
        for a, b in ((lo, apex), (apex, hi)):
            if b - a >= 2:
                chords.append((a, b))
                stack.append((a, b))
    chords = [c for c in chords if rng.random() < keep]
    return polygon_with_chords(n, chords, f"outerplanar{n}s{seed}")


def plane_tree(n: int, seed: int, max_degree: int | None = None) -> PlaneGraph:
    return tree_plane(random_tree(n, seed, max_degree))


# -- catalogs ---------------------------------------------------------------

PLANE: dict[str, Callable[[], PlaneGraph]] = {
    "tetrahedron": tetrahedron,
    "cube": cube,
    "octahedron": octahedron,
    "icosahedron": icosahedron,
    "dodecahedron": dodecahedron,
    "truncated_tetrahedron": truncated_tetrahedron,
    "prism5": lambda: plane_prism(5),
    "prism6": lambda: plane_prism(6),
    "wheel6": lambda: plane_wheel(6),
    "wheel8": lambda: plane_wheel(8),
    "wheel12": lambda: plane_wheel(12),
    "fan5": lambda: plane_fan(5),
    "fan8": lambda: plane_fan(8),
    "cycle5": lambda: plane_cycle(5),
    "cycle6": lambda: plane_cycle(6),
    "K2,3": lambda: plane_bipartite_2(3),
    "K2,8": lambda: plane_bipartite_2(8),
    "theta4": lambda: plane_theta(2),
    "friendship3": lambda: friendship(3),
    "triangle+pendants": triangle_with_pendants,
    "zigzag8": lambda: zigzag_triangulation(8),
    "triforce": triforce,
    "tree9": lambda: plane_tree(9, 3),
    "star5": lambda: tree_plane(star(5)),
    "subdivided_cube": lambda: subdivide(cube(), "subdivided_cube"),
    "subdivided_dodecahedron": lambda: subdivide(dodecahedron(), "subdivided_dodecahedron"),
}

OUTERPLANAR: dict[str, Callable[[], PlaneGraph]] = {
    "path6": lambda: tree_plane(path(6)),
    "star5": lambda: tree_plane(star(5)),
    "star7": lambda: tree_plane(star(7)),
    "cycle5": lambda: plane_cycle(5),
    "fan5": lambda: plane_fan(5),
    "fan6": lambda: plane_fan(6),
    "fan8": lambda: plane_fan(8),
    "friendship3": lambda: friendship(3),
    "friendship4": lambda: friendship(4),
    "triangle+pendants": triangle_with_pendants,
    "zigzag6": lambda: zigzag_triangulation(6),
    "zigzag9": lambda: zigzag_triangulation(9),
    "hexagon_star": lambda: polygon_with_chords(6, [(0, 2), (0, 3), (0, 4)], "hexagon_star"),
    "triforce": lambda: triforce(),
    "double_fan": lambda: polygon_with_chords(
        10, [(0, 2), (0, 3), (0, 4), (0, 5), (5, 7), (5, 8), (5, 9)], "double_fan"),
    **{f"outerplanar{n}s{s}": (lambda n=n, s=s: random_outerplanar(n, s))
       for n in (7, 9, 11) for s in (1, 2)},
}


@lru_cache(maxsize=None)
def plane_catalog() -> dict[str, PlaneGraph]:
    return {name: make() for name, make in PLANE.items()}


@lru_cache(maxsize=None)
def outerplanar_catalog() -> dict[str, PlaneGraph]:
    return {name: make() for name, make in OUTERPLANAR.items()}


def _gnp(n: int, p: float, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    edges = [(i, j) for i, j in itertools.combinations(range(n), 2) if rng.random() < p]
    return build_graph(n, edges, name=f"gnp{n}p{p}s{seed}")


@lru_cache(maxsize=None)
def general_catalog() -> dict[str, Graph]:
    """Abstract graphs (not necessarily planar) plus the underlying plane and outerplanar graphs."""
    out: dict[str, Graph] = {}
    for name, pg in {**plane_catalog(), **outerplanar_catalog()}.items():
        out.setdefault(name, pg.graph)
    extra = [complete(5), complete_bipartite(3, 3), complete_bipartite(3, 4),
             build_graph(5, [e for e in complete(5).edges if e != (0, 1)], name="K5-e"),
             petersen(), wheel(5), prism(4), theta(3)]
    extra += [_gnp(n, p, s) for n, p, s in ((7, 0.4, 1), (8, 0.35, 2), (9, 0.3, 3), (10, 0.3, 4))]
    for g in extra:
        out.setdefault(g.name, g)
    return out


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return build_graph(10, edges, name="petersen")


# -- exhaustive small graphs ------------------------------------------------


def _canonical(n: int, edges: Iterable[tuple[int, int]]) -> tuple:
    edges = list(edges)
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def connected_graphs(max_n: int = 5) -> list[Graph]:
    """All connected graphs on 1..max_n vertices up to isomorphism (31 for max_n = 5)."""
    out = []
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        seen = set()
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            g = build_graph(n, edges)
            if not g.is_connected():
                continue
            key = _canonical(n, edges)
            if key in seen:
                continue
            seen.add(key)
            out.append(build_graph(n, key, name=f"conn{n}_{len(seen) - 1}"))
    return out


def graphs_with_at_most_edges(max_m: int = 4) -> list[Graph]:
    """All graphs without isolated vertices and with 1..max_m edges, up to isomorphism."""
    comps = [g for g in connected_graphs(max_m + 1) if 1 <= g.m <= max_m]
    out = []
    for r in range(1, max_m + 1):
        for combo in itertools.combinations_with_replacement(range(len(comps)), r):
            parts = [comps[i] for i in combo]
            if sum(p.m for p in parts) > max_m:
                continue
            edges, offset = [], 0
            for p in parts:
                edges += [(u + offset, v + offset) for u, v in p.edges]
                offset += p.n
            name = "+".join(f"{p.n}:{p.m}:{i}" for p, i in zip(parts, combo))
            out.append(build_graph(offset, edges, name=name))
    return out
