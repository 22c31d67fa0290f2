"""Finders for the structural configurations used by the reducibility arguments."""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterator, NamedTuple

from .graph import Graph, build_graph, complete, complete_bipartite
from .ordering import blocks
from .plane import PlaneGraph

MAX_CYCLE = 8
MINOR_SIZE_CAP = 14


class SizeExceeded(ValueError):
    pass


# -- cycles -----------------------------------------------------------------


def cycles_of_length(g: Graph, length: int) -> Iterator[tuple[int, ...]]:
    """Each cycle once: it starts at its smallest vertex, second vertex < last."""
    if length < 3:
        raise ValueError("cycle length must be >= 3")
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend():
            v = path[-1]
            if len(path) == length:
                if s in g.adj[v] and path[1] < path[-1]:
                    yield tuple(path)
                return
            for w in g.adj[v]:
                if w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from extend()
                    path.pop()
                    on_path.discard(w)

        yield from extend()


def has_cycle_len(g: Graph, length: int) -> bool:
    return next(cycles_of_length(g, length), None) is not None


def girth(g: Graph) -> float:
    """Length of a shortest cycle (BFS from every vertex), ``inf`` for forests."""
    best = float("inf")
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        dq = deque([s])
        while dq:
            v = dq.popleft()
            for w in g.adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    dq.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def find_knet(g: Graph, k: int) -> tuple[tuple[int, ...], tuple[int, int]] | None:
    """A k-cycle together with one of its chords."""
    if k < 4:
        raise ValueError("k-nets need k >= 4")
    if k > MAX_CYCLE:
        raise SizeExceeded(f"cycle enumeration is capped at length {MAX_CYCLE}")
    for cyc in cycles_of_length(g, k):
        for i, j in combinations(range(k), 2):
            if (j - i) % k in (1, k - 1):
                continue
            if g.has_edge(cyc[i], cyc[j]):
                return cyc, (cyc[i], cyc[j])
    return None


def find_2_alternating_cycle(g: Graph) -> tuple[int, ...] | None:
    """Even cycle ``x1 w1 x2 w2 ...`` in which every ``w`` has degree 2 in ``g``."""
    deg = g.degrees()

    def walk(start, path, used):
        x = path[-1]
        for w in g.adj[x]:
            if deg[w] != 2 or w in used:
                continue
            y = g.adj[w][0] if g.adj[w][1] == x else g.adj[w][1]
            if y == start and len(path) >= 3:
                return path + [w]
            if y in used:
                continue
            used.update((w, y))
            found = walk(start, path + [w, y], used)
            if found:
                return found
            used.difference_update((w, y))
        return None

    for s in range(g.n):
        found = walk(s, [s], {s})
        if found:
            return tuple(found)
    return None


# -- light edges ------------------------------------------------------------

LIGHT_EDGE_RULES = {
    "sum13": lambda a, b: a + b <= 13,
    "sum9": lambda a, b: a + b <= 9,
    "deg3_le5": lambda a, b: (a == 3 and b <= 5) or (b == 3 and a <= 5),
}


def find_light_edge(g: Graph, rule: str) -> tuple[int, int] | None:
    """First edge (by index) whose endpoint degrees satisfy ``rule``."""
    try:
        test = LIGHT_EDGE_RULES[rule]
    except KeyError:
        raise ValueError(f"unknown light-edge rule {rule!r}") from None
    for u, v in g.edges:
        if test(g.degree(u), g.degree(v)):
            return (u, v)
    return None


# -- outerplanar configurations --------------------------------------------


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    return [(a, b, c) for a, b in g.edges for c in g.adj[b]
            if c > b and g.has_edge(a, c)]


class Configuration(NamedTuple):
    tag: str  # "a" .. "d" or "none"
    vertices: tuple[int, ...] = ()


def outerplanar_configuration(g: "Graph | PlaneGraph") -> Configuration:
    """First of the configurations (a)-(d) present, with the vertices involved.

    3-faces are the traced faces of degree 3 for a plane input; for a bare
    outerplanar graph every triangle bounds a face, so triangles are used.
    """
    if isinstance(g, PlaneGraph):
        faces3 = [tuple(f.vertices) for f in g.three_faces()]
        g = g.graph
    else:
        faces3 = triangles(g)
    deg = g.degrees()
    if g.n and min(deg) == 1:
        return Configuration("a", (deg.index(1),))
    for u, v in g.edges:
        if deg[u] == deg[v] == 2:
            return Configuration("b", (u, v))
    for face in faces3:
        for u in face:
            for x in face:
                if u != x and deg[u] == 2 and deg[x] == 3:
                    y = next(z for z in face if z not in (u, x))
                    return Configuration("c", (u, x, y))
    for x in range(g.n):
        if deg[x] != 4:
            continue
        wings = []
        for face in faces3:
            if x not in face:
                continue
            others = [z for z in face if z != x]
            for u in others:
                if deg[u] == 2:
                    wings.append((u, next(z for z in others if z != u)))
        for (u1, v1), (u2, v2) in combinations(wings, 2):
            if len({x, u1, v1, u2, v2}) == 5:
                return Configuration("d", (x, u1, v1, u2, v2))
    return Configuration("none")


# -- fixed minors -----------------------------------------------------------


def _k2bar_plus() -> Graph:
    # K_{2,3} with parts {0,1} and {2,3,4}, plus the edge 2-3
    base = complete_bipartite(2, 3)
    return build_graph(5, list(base.edges) + [(2, 3)], name="K2bar+(K1uK2)")


MINORS = {
    "K4": (complete(4), [[0, 1, 2, 3]]),
    "K23": (complete_bipartite(2, 3), [[0, 1], [2, 3, 4]]),
    "K2bar_plus": (_k2bar_plus(), [[0, 1], [2, 3], [4]]),
}


def _drop_leaves(g: Graph) -> Graph:
    """Remove vertices of degree <= 1 repeatedly (minors with min degree 2 survive)."""
    alive = set(range(g.n))
    changed = True
    deg = g.degrees()
    while changed:
        changed = False
        for v in list(alive):
            if deg[v] <= 1:
                alive.discard(v)
                for w in g.adj[v]:
                    if w in alive:
                        deg[w] -= 1
                changed = True
    return g.subgraph(alive)[0]


def _has_model(g: Graph, h: Graph, classes: list[list[int]]) -> bool:
    """Branch and bound over assignments vertex -> branch set (or unused)."""
    hn = h.n
    if g.n < hn or g.m < h.m:
        return False
    # high-degree vertices first, then BFS, so constraints tighten early
    start = max(range(g.n), key=lambda v: (g.degree(v), -v))
    order, seen = [], {start}
    dq = deque([start])
    while dq:
        v = dq.popleft()
        order.append(v)
        for w in sorted(g.adj[v], key=lambda w: -g.degree(w)):
            if w not in seen:
                seen.add(w)
                dq.append(w)
    order += [v for v in range(g.n) if v not in seen]
    label = [-1] * g.n  # -1 unassigned, 0 unused, 1..hn branch set
    class_of = {}
    for ci, cls in enumerate(classes):
        for lab in cls:
            class_of[lab + 1] = (ci, cls.index(lab))
    h_edges = [(a + 1, b + 1) for a, b in h.edges]

    def reachable(sets_ok_label: int) -> bool:
        """All pieces of branch set ``lab`` can still be joined through unassigned vertices."""
        members = [v for v in range(g.n) if label[v] == sets_ok_label]
        if not members:
            return True
        allowed = {v for v in range(g.n) if label[v] in (-1, sets_ok_label)}
        seen_r = {members[0]}
        stack = [members[0]]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w in allowed and w not in seen_r:
                    seen_r.add(w)
                    stack.append(w)
        return all(m in seen_r for m in members)

    def complete_ok() -> bool:
        for lab in range(1, hn + 1):
            members = [v for v in range(g.n) if label[v] == lab]
            if not members:
                return False
            sub = set(members)
            seen_c = {members[0]}
            stack = [members[0]]
            while stack:
                v = stack.pop()
                for w in g.adj[v]:
                    if w in sub and w not in seen_c:
                        seen_c.add(w)
                        stack.append(w)
            if len(seen_c) != len(sub):
                return False
        for a, b in h_edges:
            if not any(label[v] == a and any(label[w] == b for w in g.adj[v]) for v in range(g.n)):
                return False
        return True

    used = set()

    def go(i: int) -> bool:
        if i == len(order):
            return complete_ok()
        missing = hn - len(used)
        if len(order) - i < missing:
            return False
        v = order[i]
        for lab in range(hn, -1, -1):
            if lab and lab not in used:
                # symmetric labels in one class are opened in index order
                ci, k = class_of[lab]
                if any(classes[ci][j] + 1 not in used for j in range(k)):
                    continue
            label[v] = lab
            fresh = lab and lab not in used
            if fresh:
                used.add(lab)
            ok = all(reachable(x) for x in used)
            if ok and go(i + 1):
                return True
            if fresh:
                used.discard(lab)
            label[v] = -1
        return False

    return go(0)


def _disjoint_paths(g: Graph, a: int, b: int, want: int, skip_edge: bool = True) -> int:
    """Number of internally disjoint a-b paths (capped at ``want``), by augmenting
    paths on the split digraph ``v_in -> v_out``.  The edge ``ab`` itself is ignored."""
    cap: dict[tuple[int, int], int] = {}

    def add(u, v):
        cap[(u, v)] = cap.get((u, v), 0) + 1
        cap.setdefault((v, u), 0)

    for v in range(g.n):
        add(2 * v, 2 * v + 1)
    for u, v in g.edges:
        if skip_edge and {u, v} == {a, b}:
            continue
        add(2 * u + 1, 2 * v)
        add(2 * v + 1, 2 * u)
    nbrs: dict[int, list[int]] = {}
    for u, v in cap:
        nbrs.setdefault(u, []).append(v)
    src, dst = 2 * a + 1, 2 * b
    flow = 0
    while flow < want:
        prev = {src: src}
        dq = deque([src])
        while dq and dst not in prev:
            u = dq.popleft()
            for v in nbrs.get(u, ()):
                if v not in prev and cap[(u, v)] > 0:
                    prev[v] = u
                    dq.append(v)
        if dst not in prev:
            break
        v = dst
        while v != src:
            u = prev[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1
    return flow


def has_minor(g: Graph, minor: str, size_cap: int = MINOR_SIZE_CAP) -> bool:
    """Exact test for the minors K4, K23 and K2bar_plus.

    All three have maximum degree 3, so a minor is the same as a subdivision:
    K4 by series-parallel reduction, K23 as two vertices joined by three
    internally disjoint paths of length >= 2, and K2bar_plus (K4 with one edge
    subdivided) as a block on >= 5 vertices that has a K4 minor.
    """
    if minor not in MINORS:
        raise ValueError(f"unsupported minor {minor!r}")
    if g.n > size_cap:
        raise SizeExceeded(f"{g.n} vertices exceeds the minor-test cap {size_cap}")
    if minor == "K4":
        return has_k4_minor_by_reduction(g)
    if minor == "K23":
        return any(_disjoint_paths(g, a, b, 3) >= 3
                   for a, b in combinations(range(g.n), 2)
                   if g.degree(a) >= 3 and g.degree(b) >= 3)
    for block in blocks(g).blocks:
        if len(block) >= 5 and has_k4_minor_by_reduction(g.subgraph(block)[0]):
            return True
    return False


def has_minor_by_search(g: Graph, minor: str) -> bool:
    """Brute-force branch-set search; only practical for about 8 vertices."""
    h, classes = MINORS[minor]
    for block in blocks(g).blocks:
        if len(block) < h.n:
            continue
        sub = _drop_leaves(g.subgraph(block)[0])
        if _has_model(sub, h, classes):
            return True
    return False


def has_k4_minor_by_reduction(g: Graph) -> bool:
    """Independent K4 test: series-parallel reduction (drop degree <= 1, suppress degree 2)."""
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            d = len(adj[v])
            if d <= 1:
                for w in adj[v]:
                    adj[w].discard(v)
                del adj[v]
                changed = True
            elif d == 2:
                a, b = adj[v]
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                del adj[v]
                changed = True
    return bool(adj)
