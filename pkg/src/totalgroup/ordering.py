"""Degeneracy orderings, block decomposition, and the oracles built on them."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError


@dataclass(frozen=True)
class DegeneracyCertificate:
    col: int
    ordering: tuple[int, ...]
    back_degrees: tuple[int, ...]  # indexed by vertex id

    def position(self) -> list[int]:
        pos = [0] * len(self.ordering)
        for i, v in enumerate(self.ordering):
            pos[v] = i
        return pos


def coloring_number(g: Graph) -> DegeneracyCertificate:
    """Smallest-last ordering: repeatedly strip a minimum-degree vertex.

    Ties go to the lowest vertex id.  The ordering is the reverse of the
    removal order, so each vertex has at most ``col - 1`` earlier neighbours.
    """
    deg = g.degrees()
    alive = [True] * g.n
    removed = []
    for _ in range(g.n):
        v = min((d, v) for v, d in enumerate(deg) if alive[v])[1]
        alive[v] = False
        removed.append(v)
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
    ordering = tuple(reversed(removed))
    pos = {v: i for i, v in enumerate(ordering)}
    back = tuple(sum(1 for w in g.adj[v] if pos[w] < pos[v]) for v in range(g.n))
    col = max(back, default=-1) + 1
    return DegeneracyCertificate(col, ordering, back)


def back_degrees(g: Graph, ordering) -> list[int]:
    pos = {v: i for i, v in enumerate(ordering)}
    return [sum(1 for w in g.adj[v] if pos[w] < pos[v]) for v in range(g.n)]


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components (Hopcroft-Tarjan, iterative); isolated vertices are blocks."""
    disc = [-1] * g.n
    low = [0] * g.n
    found: list[frozenset[int]] = []
    cuts: set[int] = set()
    t = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        if not g.adj[root]:
            disc[root] = t
            t += 1
            found.append(frozenset([root]))
            continue
        disc[root] = low[root] = t
        t += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.adj[root]))]
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(g.adj[w])))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, v):
                        break
                found.append(frozenset(comp))
                if parent != root:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return BlockDecomposition(tuple(found), frozenset(cuts))


def _is_complete(g: Graph, block: frozenset[int]) -> bool:
    k = len(block)
    m = sum(1 for u, v in g.edges if u in block and v in block)
    return m == k * (k - 1) // 2


def _is_cycle(g: Graph, block: frozenset[int]) -> bool:
    if len(block) < 3:
        return False
    return all(sum(1 for w in g.adj[v] if w in block) == 2 for v in block)


def d_group_choosable_oracle(g: Graph) -> bool:
    """True iff some block is neither complete nor a cycle (connected input)."""
    if not g.is_connected() or g.n == 0:
        raise GraphError("d_group_choosable_oracle needs a connected, non-empty graph")
    return any(not _is_complete(g, b) and not _is_cycle(g, b) for b in blocks(g).blocks)


@dataclass(frozen=True)
class CoreResult:
    core: Graph
    kept: tuple[int, ...]
    shape: str  # "K1", "C<2m+2>", "Theta2,2,<2m>", or "other"

    @property
    def two_choosable_shape(self) -> bool:
        return self.shape != "other"


def _theta_shape(core: Graph) -> str | None:
    degs = core.degrees()
    hubs = [v for v, d in enumerate(degs) if d == 3]
    if len(hubs) != 2 or any(d not in (2, 3) for d in degs) or not core.is_connected():
        return None
    a, b = hubs
    lengths = []
    for start in core.adj[a]:
        prev, cur, steps = a, start, 1
        while cur != b:
            if degs[cur] != 2:
                return None
            prev, cur = cur, next(w for w in core.adj[cur] if w != prev)
            steps += 1
        lengths.append(steps)
    if core.n != sum(lengths) - 1:
        return None
    lengths.sort()
    if lengths[0] == 2 and lengths[1] == 2 and lengths[2] % 2 == 0:
        return f"Theta2,2,{lengths[2]}"
    return None


def prune_core(g: Graph) -> CoreResult:
    """Strip degree-1 vertices until none remain and name what is left."""
    if g.n == 0 or not g.is_connected():
        raise GraphError("prune_core needs a connected, non-empty graph")
    alive = set(range(g.n))
    deg = g.degrees()
    queue = [v for v in range(g.n) if deg[v] == 1]
    while queue and len(alive) > 1:
        v = queue.pop()
        if v not in alive or deg[v] != 1:
            continue
        alive.discard(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    core, kept = g.subgraph(alive)
    degs = core.degrees()
    if core.n == 1:
        shape = "K1"
    elif all(d == 2 for d in degs) and core.n % 2 == 0 and core.n >= 4:
        shape = f"C{core.n}"
    else:
        shape = _theta_shape(core) or "other"
    return CoreResult(core, tuple(kept), shape)
