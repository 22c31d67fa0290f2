"""Simple undirected graphs, orientations, and the family generators.

Vertex numbering conventions (frozen; positional references depend on them):

* ``path(n)``: ``0 - 1 - ... - n-1``.
* ``cycle(n)``: ``0..n-1`` in cyclic order; edge ``i`` joins ``i`` and ``i+1 mod n``.
* ``wheel(n)``: rim is ``cycle(n)``, hub is vertex ``n``.
* ``fan(n)``: path ``0..n-1`` plus an apex ``n`` adjacent to all of it.
* ``star(k)``: hub ``0``, leaves ``1..k``.
* ``complete_bipartite(a, b)``: parts ``0..a-1`` and ``a..a+b-1``.
* ``theta(m)``: long path ``0..2m``, then the middles of the two short paths
  ``2m+1`` and ``2m+2``; the distinguished vertices are ``0`` and ``2m``.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Malformed graph input: loops, duplicate edges, bad indices, bad params."""


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(x)) for x in nbrs))
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.edges)})

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def edge_index(self, u: int, v: int) -> int:
        try:
            return self._index[(min(u, v), max(u, v))]
        except KeyError:
            raise GraphError(f"no edge {u}-{v}") from None

    def is_regular(self) -> bool:
        return self.n == 0 or self.min_degree == self.max_degree

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled to ``0..k-1``; also returns the kept ids."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return build_graph(len(keep), edges), keep

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        drop = {(min(u, v), max(u, v)) for u, v in removed}
        return build_graph(self.n, [e for e in self.edges if e not in drop])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def __repr__(self) -> str:
        label = f"{self.name}, " if self.name else ""
        return f"Graph({label}n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]], name: str = "") -> Graph:
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    canon: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
        canon.append(key)
    return Graph(n, tuple(canon), name=name)


@dataclass(frozen=True)
class Orientation:
    """Direction of every edge of a graph, as ``(tail, head)`` by edge index."""

    arcs: tuple[tuple[int, int], ...]

    def tail(self, e: int) -> int:
        return self.arcs[e][0]

    def head(self, e: int) -> int:
        return self.arcs[e][1]

    def flipped(self, e: int) -> bool:
        """True when edge ``e`` runs from its larger to its smaller endpoint."""
        t, h = self.arcs[e]
        return t > h

    def flip(self, edges: Iterable[int]) -> "Orientation":
        arcs = list(self.arcs)
        for e in edges:
            t, h = arcs[e]
            arcs[e] = (h, t)
        return Orientation(tuple(arcs))

    def check(self, g: Graph) -> None:
        if len(self.arcs) != g.m:
            raise GraphError(f"orientation covers {len(self.arcs)} edges, graph has {g.m}")
        for (t, h), (u, v) in zip(self.arcs, g.edges):
            if (min(t, h), max(t, h)) != (u, v):
                raise GraphError(f"orientation arc {t}->{h} does not match edge {u}-{v}")

    def to_json(self) -> list[list[int]]:
        return [list(a) for a in self.arcs]


def orient(g: Graph, seed: int = 0) -> Orientation:
    """Deterministic orientation.

    Seed 0 directs every edge away from the BFS root of its component (the
    lowest vertex); ties between equal-depth endpoints go low id to high id.
    Other seeds draw independent random directions.
    """
    if seed == 0:
        depth = [-1] * g.n
        for s in range(g.n):
            if depth[s] >= 0:
                continue
            depth[s] = 0
            frontier = [s]
            while frontier:
                nxt = []
                for v in frontier:
                    for w in g.adj[v]:
                        if depth[w] < 0:
                            depth[w] = depth[v] + 1
                            nxt.append(w)
                frontier = nxt
        arcs = tuple((u, v) if (depth[u], u) <= (depth[v], v) else (v, u) for u, v in g.edges)
        return Orientation(arcs)
    rng = np.random.default_rng(seed)
    bits = rng.integers(0, 2, size=g.m)
    return Orientation(tuple((v, u) if b else (u, v) for (u, v), b in zip(g.edges, bits)))


# -- families ---------------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def wheel(n: int) -> Graph:
    if n < 3:
        raise GraphError("wheel needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return build_graph(n + 1, edges, name=f"W{n}")


def fan(n: int) -> Graph:
    if n < 2:
        raise GraphError("fan needs n >= 2")
    edges = [(i, i + 1) for i in range(n - 1)] + [(i, n) for i in range(n)]
    return build_graph(n + 1, edges, name=f"F{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], name=f"K{n}")


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite needs parts >= 1")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)], name=f"K{a},{b}")


def star(k: int) -> Graph:
    if k < 1:
        raise GraphError("star needs k >= 1")
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)], name=f"K1,{k}")


def theta(m: int) -> Graph:
    """Theta graph with paths of lengths 2, 2 and 2m between vertices 0 and 2m."""
    if m < 1:
        raise GraphError("theta needs m >= 1")
    end = 2 * m
    edges = [(i, i + 1) for i in range(end)]
    for mid in (end + 1, end + 2):
        edges += [(0, mid), (mid, end)]
    return build_graph(end + 3, edges, name=f"Theta2,2,{end}")


def prism(n: int) -> Graph:
    """Two n-cycles ``0..n-1`` and ``n..2n-1`` joined by the spokes ``i - n+i``."""
    if n < 3:
        raise GraphError("prism needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return build_graph(2 * n, edges, name=f"Prism{n}")


def prufer_to_tree(seq: Sequence[int]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return build_graph(n, edges)


def random_tree(n: int, seed: int, max_degree: int | None = None) -> Graph:
    """Seeded random labelled tree via Prufer sequences, rejecting degree overflow."""
    if n < 1:
        raise GraphError("tree needs n >= 1")
    if n == 1:
        return build_graph(1, [], name="tree1")
    if n == 2:
        return build_graph(2, [(0, 1)], name="tree2")
    if max_degree is not None and max_degree < 2:
        raise GraphError("trees on >= 3 vertices need max_degree >= 2")
    rng = np.random.default_rng(seed)
    while True:
        seq = rng.integers(0, n, size=n - 2).tolist()
        if max_degree is None or max(np.bincount(seq, minlength=n)) + 1 <= max_degree:
            break
    g = prufer_to_tree(seq)
    return Graph(g.n, g.edges, name=f"tree{n}s{seed}")


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "wheel": wheel,
    "fan": fan,
    "complete": complete,
    "bipartite": complete_bipartite,
    "star": star,
    "theta": theta,
    "prism": prism,
    "tree": random_tree,
}


def generate(family: str, *params: int) -> Graph:
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}") from None
    try:
        return fn(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {family}: {params}") from exc


# -- JSON -------------------------------------------------------------------


def graph_from_json(data: dict) -> Graph:
    return build_graph(int(data["n"]), data["edges"], name=data.get("name", ""))


def load_graph_json(path: "str | os.PathLike") -> dict:
    with open(path) as fh:
        return json.load(fh)
