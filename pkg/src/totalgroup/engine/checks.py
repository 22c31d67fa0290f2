"""Exhaustive and randomized checks of group colourability and choosability.

Every exhaustive check runs the same pipeline:

1. **Peel.**  A vertex whose list is longer than its degree in what remains can
   always be coloured last, so it is removed; repeat until stable.  Only the
   remaining core is searched.
2. **Normalise labels.**  Shifting vertex colours by ``c(v) -> t_v c(v)`` maps
   ``f(x->y)`` to ``t_x f(x->y) t_y^-1`` and preserves solvability, so ``f`` is
   fixed to the identity on a BFS spanning forest of the core.
3. **Normalise one list per component.**  A uniform shift of a component keeps
   the forest labels at the identity and permutes the free labels, so the
   root's list is taken to contain the identity.
4. **Enumerate** the remaining (lists, labels) space with the exhaust kernel,
   chunked so the wall-clock budget is honoured.

A failure is reported with a witness on the original graph and re-checked by
an independent route before it is returned.
"""

from __future__ import annotations

import itertools
import math
import os
import time
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from ..graph import Graph, Orientation, orient
from ..groups import Group
from . import _kernels
from .solver import DimensionError, Solver, from_mask, to_mask

HOLDS = "holds"
FAILS = "fails"
BUDGET = "budget-exceeded"

CHUNK = 1 << 18


def _env_number(name: str, default: float) -> float:
    raw = os.environ.get(name)
    return float(raw) if raw else default


@dataclass(frozen=True)
class Budget:
    """Hard limits for one exhaustive check.  Zero means nothing may be searched."""

    nodes: int = 10**10
    seconds: float = 1800.0
    instances: int = 10**9

    @classmethod
    def from_env(cls) -> "Budget":
        return cls(
            nodes=int(_env_number("TOTALGROUP_BUDGET_NODES", cls.nodes)),
            seconds=_env_number("TOTALGROUP_BUDGET_SECONDS", cls.seconds),
            instances=int(_env_number("TOTALGROUP_BUDGET_INSTANCES", cls.instances)),
        )

    def is_zero(self) -> bool:
        return self.nodes <= 0 or self.seconds <= 0 or self.instances <= 0


@dataclass
class Verdict:
    check: str
    status: str
    graph: str
    group: str
    params: dict = field(default_factory=dict)
    witness: dict | None = None
    stats: dict = field(default_factory=dict)
    confirmed: bool | None = None

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def fails(self) -> bool:
        return self.status == FAILS

    def to_json(self) -> dict:
        return asdict(self)


def _graph_label(g: Graph) -> str:
    return g.name or f"n={g.n},m={g.m}"


# -- helpers ----------------------------------------------------------------


def _peel(g: Graph, sizes: Sequence[int]) -> list[int]:
    """Vertices left after removing every vertex whose list outgrows its degree."""
    alive = [True] * g.n
    deg = g.degrees()
    queue = [v for v in range(g.n) if sizes[v] > deg[v]]
    while queue:
        v = queue.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if sizes[w] > deg[w]:
                    queue.append(w)
    return [v for v in range(g.n) if alive[v]]


def _spanning_forest(g: Graph) -> tuple[set[int], list[int]]:
    tree_edges: set[int] = set()
    roots = []
    seen = [False] * g.n
    for r in range(g.n):
        if seen[r]:
            continue
        roots.append(r)
        seen[r] = True
        frontier = [r]
        while frontier:
            nxt = []
            for v in frontier:
                for w in g.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        tree_edges.add(g.edge_index(v, w))
                        nxt.append(w)
            frontier = nxt
    return tree_edges, roots


def _subset_masks(q: int, k: int, must_contain: int | None = None) -> list[int]:
    out = []
    for combo in itertools.combinations(range(q), k):
        if must_contain is None or must_contain in combo:
            out.append(to_mask(combo))
    return out


def normalized_space_size(g: Graph, group: Group, sizes: Sequence[int] | None) -> int:
    """Instances the exhaustive walk visits after peeling and normalisation."""
    q = group.order
    sizes = [q] * g.n if sizes is None else list(sizes)
    core, kept = g.subgraph(_peel(g, sizes))
    tree, roots = _spanning_forest(core)
    total = q ** (core.m - len(tree))
    rootset = set(roots)
    for i, v in enumerate(kept):
        k = sizes[v]
        if 0 < k < q:
            total *= math.comb(q - 1, k - 1) if i in rootset else math.comb(q, k)
    return total


def recheck_witness(g: Graph, o: Orientation, group: Group, labels: Sequence[int],
                    lists: Sequence[Sequence[int]], limit: int = 200_000) -> bool:
    """True when the witness is confirmed uncolourable by a route that avoids the kernels.

    Small instances are brute forced over the product of the lists; larger
    ones fall back to a fresh solver run with the reversed vertex order.
    """
    if math.prod(len(lst) for lst in lists) <= limit:
        sub = [[group.sub(a, b) for b in range(group.order)] for a in range(group.order)]
        for colors in itertools.product(*lists):
            if all(sub[colors[t]][colors[h]] != labels[e] for e, (t, h) in enumerate(o.arcs)):
                return False
        return True
    solver = Solver(g, o, group, order=list(reversed(range(g.n))))
    return solver.solve(labels, lists) is None


# -- the exhaustive walk ----------------------------------------------------


def _exhaust(check: str, g: Graph, group: Group, sizes: Sequence[int] | None,
             budget: Budget | None, o: Orientation | None, params: dict) -> Verdict:
    budget = Budget.from_env() if budget is None else budget
    o = orient(g) if o is None else o
    o.check(g)
    q = group.order
    full = sizes is None
    sizes = [q] * g.n if full else [int(s) for s in sizes]
    verdict = Verdict(check, HOLDS, _graph_label(g), group.name, dict(params))
    t0 = time.perf_counter()
    if budget.is_zero():
        verdict.status = BUDGET
        verdict.stats = {"bound": "zero budget", "instances": 0, "nodes": 0, "seconds": 0.0}
        return verdict

    kept = _peel(g, sizes)
    core, kept = g.subgraph(kept)
    back = {v: i for i, v in enumerate(kept)}
    core_arcs = tuple((back[t], back[h]) for (t, h) in o.arcs if t in back and h in back)
    core_o = Orientation(core_arcs)
    tree, roots = _spanning_forest(core)
    free = [e for e in range(core.m) if e not in tree]

    list_vertices, choices = [], []
    base_masks = np.full(core.n, (1 << q) - 1, dtype=np.int64)
    rootset = set(roots)
    for i, v in enumerate(kept):
        k = sizes[v]
        if k >= q:
            continue
        opts = _subset_masks(q, k, group.identity if (i in rootset and k > 0) else None)
        if len(opts) == 1:
            base_masks[i] = opts[0]
            continue
        list_vertices.append(i)
        choices.append(opts)
    width = max((len(c) for c in choices), default=1)
    list_choices = np.zeros((len(choices), width), dtype=np.int64)
    for i, opts in enumerate(choices):
        list_choices[i, :len(opts)] = opts
    list_counts = np.array([len(c) for c in choices], dtype=np.int64)
    total = math.prod(len(c) for c in choices) * q ** len(free)

    stats = {"peeled": g.n - core.n, "core_vertices": core.n, "core_edges": core.m,
             "free_edges": len(free), "instances_total": total, "instances": 0, "nodes": 0}
    verdict.stats = stats
    # the instance budget caps how far the walk may go; a failure found
    # before the cap is still a complete answer
    limit = min(total, budget.instances)

    solver = Solver(core, core_o, group)
    labels = np.full(core.m, group.identity, dtype=np.int64)
    masks = base_masks.copy()
    colors = np.zeros(core.n, dtype=np.int64)
    cache = np.zeros(1, dtype=np.int64)
    free_arr = np.asarray(free, dtype=np.int64)
    lv_arr = np.asarray(list_vertices, dtype=np.int64)
    start = 0
    while start < limit and core.n:
        stop = min(limit, start + CHUNK)
        status, idx, nodes = _kernels.exhaust_kernel(
            solver.order, solver.pos, solver.arc_ptr, solver.arc_dst, solver.arc_edge,
            solver.arc_tail, solver.mul, solver.inv, solver.tails, solver.heads,
            labels, masks, free_arr, np.int64(q), lv_arr, list_choices, list_counts,
            np.int64(start), np.int64(stop), np.int64(budget.nodes - stats["nodes"]),
            colors, cache)
        stats["nodes"] += int(nodes)
        stats["instances"] = int(idx)
        if status == 0:
            verdict.status = FAILS
            break
        if status < 0:
            verdict.status = BUDGET
            stats["bound"] = "nodes"
            break
        start = stop
        if start == limit < total:
            verdict.status = BUDGET
            stats["bound"] = "instances"
            break
        if start < total and time.perf_counter() - t0 > budget.seconds:
            verdict.status = BUDGET
            stats["bound"] = "seconds"
            break
    stats["seconds"] = round(time.perf_counter() - t0, 6)
    if verdict.status != FAILS:
        return verdict

    # rebuild the failing instance on the original graph
    core_labels = labels.tolist()
    core_masks = masks.tolist()
    full_labels = [group.identity] * g.m
    for ce, (t, h) in enumerate(core.edges):
        full_labels[g.edge_index(kept[t], kept[h])] = core_labels[ce]
    full_lists = []
    for v in range(g.n):
        if v in back:
            full_lists.append(from_mask(core_masks[back[v]]))
        else:
            full_lists.append(list(range(min(sizes[v], q))))
    verdict.witness = {"orientation": o.to_json(), "labels": full_labels, "lists": full_lists,
                       "instance": int(stats["instances"])}
    verdict.confirmed = recheck_witness(g, o, group, full_labels, full_lists)
    return verdict


def check_group_colorable(g: Graph, group: Group, budget: Budget | None = None,
                          orientation: Orientation | None = None) -> Verdict:
    """Does every labelling ``f`` admit a colouring from the whole group?"""
    return _exhaust("group-colorable", g, group, None, budget, orientation, {})


def check_group_choosable(g: Graph, group: Group, k: int, budget: Budget | None = None,
                          orientation: Orientation | None = None) -> Verdict:
    """Is ``g`` (A, L)-colourable for every k-list assignment from ``group``?"""
    if k < 0 or group.order < k:
        raise DimensionError(f"list size {k} needs a group of order >= {k}")
    return _exhaust("group-choosable", g, group, [k] * g.n, budget, orientation, {"k": k})


def check_d_group_choosable(g: Graph, group: Group, budget: Budget | None = None,
                            orientation: Orientation | None = None) -> Verdict:
    """Degree-sized lists: ``|L(v)| = deg(v)``."""
    if group.order < g.max_degree:
        raise DimensionError(f"group order {group.order} < max degree {g.max_degree}")
    return _exhaust("d-group-choosable", g, group, g.degrees(), budget, orientation, {})


# -- sampling ---------------------------------------------------------------


@dataclass
class RandomizedReport:
    graph: str
    group: str
    trials: int
    seed: int
    k: int | None
    failures: list[dict]
    seconds: float

    @property
    def failure_count(self) -> int:
        return len(self.failures)

    def to_json(self) -> dict:
        return asdict(self)


def randomized_colorability(g: Graph, group: Group, trials: int, seed: int = 0,
                            k: int | None = None, planted: Sequence[Sequence[int]] = (),
                            orientation: Orientation | None = None) -> RandomizedReport:
    """Uniformly sampled labellings (and k-lists when ``k`` is given), deterministic per seed.

    ``planted`` labellings are tried first with full lists; they count toward ``trials``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    o = orient(g) if orientation is None else orientation
    solver = Solver(g, o, group)
    rng = np.random.default_rng(seed)
    q = group.order
    failures = []
    t0 = time.perf_counter()
    planted = [list(p) for p in planted]
    for trial in range(trials):
        if trial < len(planted):
            labels = np.asarray(planted[trial], dtype=np.int64)
            masks = solver.masks_array(None)
        else:
            labels = rng.integers(0, q, size=g.m).astype(np.int64)
            if k is None:
                masks = solver.masks_array(None)
            else:
                masks = np.array([to_mask(rng.choice(q, size=k, replace=False)) for _ in range(g.n)],
                                 dtype=np.int64)
        status, _, _ = solver.solve_arrays(labels, masks)
        if status == 0:
            failures.append({"trial": trial, "labels": labels.tolist(),
                             "lists": [from_mask(int(m)) for m in masks]})
    return RandomizedReport(_graph_label(g), group.name, trials, seed, k, failures,
                            round(time.perf_counter() - t0, 6))
