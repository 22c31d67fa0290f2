"""Single-instance (A, L, f)-colouring: compile a graph once, solve many instances."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from ..graph import Graph, Orientation, orient
from ..groups import Group
from ..ordering import coloring_number
from . import _kernels

MAX_GROUP_ORDER = 62

Labeling = Sequence[int]
Lists = Sequence[Iterable[int]]


class DimensionError(ValueError):
    """Labeling or list assignment does not match the graph or the group."""


class BudgetExceeded(RuntimeError):
    def __init__(self, bound: str, reached: int | float):
        super().__init__(f"{bound} budget exhausted at {reached}")
        self.bound = bound
        self.reached = reached


def to_mask(elements: Iterable[int]) -> int:
    m = 0
    for a in elements:
        m |= 1 << int(a)
    return m


def from_mask(mask: int) -> list[int]:
    out, i = [], 0
    while mask >> i:
        if (mask >> i) & 1:
            out.append(i)
        i += 1
    return out


class Solver:
    """Arrays for one (graph, orientation, group, vertex order) combination."""

    def __init__(self, g: Graph, o: Orientation | None, group: Group,
                 order: Sequence[int] | None = None):
        if group.order > MAX_GROUP_ORDER:
            raise DimensionError(f"group order {group.order} exceeds {MAX_GROUP_ORDER}")
        o = orient(g) if o is None else o
        o.check(g)
        self.graph, self.orientation, self.group = g, o, group
        if order is None:
            order = coloring_number(g).ordering
        self.order = np.asarray(order, dtype=np.int64)
        if sorted(self.order.tolist()) != list(range(g.n)):
            raise DimensionError("order must be a permutation of the vertices")
        self.pos = np.empty(g.n, dtype=np.int64)
        self.pos[self.order] = np.arange(g.n)
        self.tails = np.array([a[0] for a in o.arcs], dtype=np.int64)
        self.heads = np.array([a[1] for a in o.arcs], dtype=np.int64)
        src, dst, edge, tail = [], [], [], []
        for e, (t, h) in enumerate(o.arcs):
            src += [t, h]
            dst += [h, t]
            edge += [e, e]
            tail += [1, 0]
        perm = np.argsort(np.asarray(src, dtype=np.int64), kind="stable")
        self.arc_dst = np.asarray(dst, dtype=np.int64)[perm]
        self.arc_edge = np.asarray(edge, dtype=np.int64)[perm]
        self.arc_tail = np.asarray(tail, dtype=np.int64)[perm]
        self.arc_ptr = np.zeros(g.n + 1, dtype=np.int64)
        np.cumsum(np.bincount(np.asarray(src, dtype=np.int64), minlength=g.n), out=self.arc_ptr[1:])
        self.mul = np.ascontiguousarray(group.table, dtype=np.int64)
        self.inv = np.ascontiguousarray(group.inv, dtype=np.int64)
        self.full_mask = (1 << group.order) - 1

    # -- conversions --------------------------------------------------------

    def labels_array(self, f: Labeling | None) -> np.ndarray:
        if f is None:
            return np.full(self.graph.m, self.group.identity, dtype=np.int64)
        arr = np.asarray(list(f), dtype=np.int64)
        if arr.shape != (self.graph.m,):
            raise DimensionError(f"labeling has {arr.size} entries, graph has {self.graph.m} edges")
        if arr.size and (arr.min() < 0 or arr.max() >= self.group.order):
            raise DimensionError("label outside the group")
        return arr

    def masks_array(self, lists: Lists | None) -> np.ndarray:
        if lists is None:
            return np.full(self.graph.n, self.full_mask, dtype=np.int64)
        lists = list(lists)
        if len(lists) != self.graph.n:
            raise DimensionError(f"{len(lists)} lists for {self.graph.n} vertices")
        out = np.empty(self.graph.n, dtype=np.int64)
        for v, lst in enumerate(lists):
            lst = list(lst)
            if any(not 0 <= a < self.group.order for a in lst):
                raise DimensionError(f"list of vertex {v} leaves the group")
            out[v] = to_mask(lst)
        return out

    # -- solving ------------------------------------------------------------

    def solve_arrays(self, labels: np.ndarray, masks: np.ndarray,
                     node_budget: int = 2**62) -> tuple[int, np.ndarray, int]:
        colors = np.zeros(self.graph.n, dtype=np.int64)
        status, nodes = _kernels.solve_kernel(
            self.order, self.pos, self.arc_ptr, self.arc_dst, self.arc_edge, self.arc_tail,
            self.mul, self.inv, labels, masks, colors, np.int64(node_budget))
        return int(status), colors, int(nodes)

    def solve(self, f: Labeling | None = None, lists: Lists | None = None,
              node_budget: int = 2**62) -> list[int] | None:
        status, colors, nodes = self.solve_arrays(self.labels_array(f), self.masks_array(lists),
                                                  node_budget)
        if status < 0:
            raise BudgetExceeded("nodes", nodes)
        return colors.tolist() if status == 1 else None

    def is_valid(self, f: Labeling | None, lists: Lists | None, colors: Sequence[int]) -> bool:
        return bool(_kernels.coloring_valid(
            self.tails, self.heads, self.mul, self.inv, self.labels_array(f),
            self.masks_array(lists), np.asarray(colors, dtype=np.int64)))


def solve(g: Graph, o: Orientation | None, group: Group, f: Labeling | None = None,
          lists: Lists | None = None, node_budget: int = 2**62) -> list[int] | None:
    """An (A, L, f)-colouring of ``g`` or ``None``; ``lists=None`` means full lists."""
    return Solver(g, o, group).solve(f, lists, node_budget)


def validate_coloring(g: Graph, o: Orientation, group: Group, f: Labeling | None,
                      lists: Lists | None, colors: Sequence[int]) -> bool:
    """Plain re-check of list membership and every directed-edge inequation."""
    if colors is None or len(colors) != g.n:
        return False
    if lists is not None:
        for v, lst in enumerate(lists):
            if colors[v] not in set(lst):
                return False
    for e, (t, h) in enumerate(o.arcs):
        label = group.identity if f is None else f[e]
        if group.sub(colors[t], colors[h]) == label:
            return False
    return True
