"""Total graphs and line graphs, with a map back to the base graph."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, build_graph

VERTEX = "vertex"
EDGE = "edge"


@dataclass(frozen=True)
class DerivedGraph:
    graph: Graph
    origin: tuple[tuple[str, int], ...]
    base: Graph

    def vertex_of(self, v: int) -> int:
        """Derived index of base vertex ``v``."""
        if self.origin and self.origin[0][0] == VERTEX:
            return v
        raise ValueError("line graphs have no vertex-origin elements")

    def edge_of(self, e: int) -> int:
        """Derived index of base edge ``e``."""
        offset = self.base.n if self.origin and self.origin[0][0] == VERTEX else 0
        return offset + e

    def vertex_part(self) -> list[int]:
        return [i for i, (kind, _) in enumerate(self.origin) if kind == VERTEX]

    def edge_part(self) -> list[int]:
        return [i for i, (kind, _) in enumerate(self.origin) if kind == EDGE]


def _edges_sharing_endpoint(g: Graph, offset: int) -> list[tuple[int, int]]:
    out = []
    for v in range(g.n):
        inc = sorted(g.edge_index(v, w) for w in g.adj[v])
        for i, a in enumerate(inc):
            for b in inc[i + 1:]:
                out.append((offset + a, offset + b))
    return out


def total_graph(g: Graph) -> DerivedGraph:
    """T(G): base vertices keep their ids, base edge ``e`` becomes ``n + e``."""
    n = g.n
    edges = list(g.edges)
    edges += [(v, n + e) for e, (a, b) in enumerate(g.edges) for v in (a, b)]
    edges += _edges_sharing_endpoint(g, n)
    origin = tuple((VERTEX, v) for v in range(n)) + tuple((EDGE, e) for e in range(g.m))
    name = f"T({g.name})" if g.name else ""
    return DerivedGraph(build_graph(n + g.m, edges, name=name), origin, g)


def line_graph(g: Graph) -> DerivedGraph:
    origin = tuple((EDGE, e) for e in range(g.m))
    name = f"L({g.name})" if g.name else ""
    return DerivedGraph(build_graph(g.m, _edges_sharing_endpoint(g, 0), name=name), origin, g)
