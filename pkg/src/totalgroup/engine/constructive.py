"""Constructive colourings: greedy, the two-phase total colouring, and the hard Z3 labelling."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from ..derived import DerivedGraph, line_graph, total_graph
from ..graph import Graph, Orientation, cycle, orient
from ..groups import Group, make_group
from ..ordering import coloring_number
from .solver import DimensionError


class TwoPhaseError(RuntimeError):
    def __init__(self, phase: int, element: int):
        super().__init__(f"phase {phase} ran out of colours at derived vertex {element}")
        self.phase = phase
        self.element = element


class PreconditionError(ValueError):
    pass


def _arcs_at(o: Orientation, n: int) -> list[list[tuple[int, int, bool]]]:
    """Per vertex: (edge index, other end, vertex-is-tail)."""
    out: list[list[tuple[int, int, bool]]] = [[] for _ in range(n)]
    for e, (t, h) in enumerate(o.arcs):
        out[t].append((e, h, True))
        out[h].append((e, t, False))
    return out


def _forbidden(x: int, arcs, group: Group, f: Sequence[int], colors: list) -> set[int]:
    bad = set()
    for e, y, x_is_tail in arcs[x]:
        s = colors[y]
        if s is None:
            continue
        # x -> y:  c(x) c(y)^-1 != f  =>  c(x) != f c(y);   y -> x:  c(x) != f^-1 c(y)
        a = f[e] if x_is_tail else group.inverse(f[e])
        bad.add(group.op(a, s))
    return bad


def greedy(g: Graph, ordering: Sequence[int], group: Group, f: Sequence[int],
           lists: Sequence[Sequence[int]], orientation: Orientation | None = None) -> list[int] | None:
    """Colour in ``ordering``, taking the first list entry no coloured neighbour forbids."""
    o = orient(g) if orientation is None else orientation
    if len(f) != g.m or len(lists) != g.n:
        raise DimensionError("labeling/list sizes do not match the graph")
    arcs = _arcs_at(o, g.n)
    colors: list[int | None] = [None] * g.n
    for v in ordering:
        bad = _forbidden(v, arcs, group, f, colors)
        pick = next((a for a in lists[v] if a not in bad), None)
        if pick is None:
            return None
        colors[v] = pick
    return colors  # type: ignore[return-value]


def two_phase_total(g: Graph, group: Group, f: Sequence[int], lists: Sequence[Sequence[int]],
                    edge_bound: int | None = None,
                    orientation: Orientation | None = None) -> tuple[list[int], DerivedGraph, Orientation]:
    """Colour T(g): vertices of ``g`` first, then its edges from what their lists still allow.

    ``edge_bound`` is an upper estimate of the group choice index of ``g``; it
    defaults to the colouring number of the line graph.  Every list must have
    at least ``edge_bound + 2`` entries.
    """
    derived = total_graph(g)
    t = derived.graph
    o = orient(t) if orientation is None else orientation
    o.check(t)
    if len(f) != t.m or len(lists) != t.n:
        raise DimensionError("labeling/lists must be given on the total graph")
    lg = line_graph(g)
    if edge_bound is None:
        edge_bound = coloring_number(lg.graph).col
    need = edge_bound + 2
    short = [x for x in range(t.n) if len(set(lists[x])) < need]
    if short:
        raise PreconditionError(f"lists of {short} are shorter than {need}")

    arcs = _arcs_at(o, t.n)
    colors: list[int | None] = [None] * t.n
    # phase 1: the vertices of g, greedily along a degeneracy ordering of g
    for v in coloring_number(g).ordering:
        x = derived.vertex_of(v)
        bad = _forbidden(x, arcs, group, f, colors)
        pick = next((a for a in lists[x] if a not in bad), None)
        if pick is None:
            raise TwoPhaseError(1, x)
        colors[x] = pick
    # phase 2: each edge loses the two values its coloured endpoints forbid,
    # then edges are coloured greedily along a degeneracy ordering of L(g)
    reduced = {}
    for e in range(g.m):
        x = derived.edge_of(e)
        bad = _forbidden(x, arcs, group, f, colors)
        reduced[x] = [a for a in lists[x] if a not in bad]
    for e in coloring_number(lg.graph).ordering:
        x = derived.edge_of(e)
        bad = _forbidden(x, arcs, group, f, colors)
        pick = next((a for a in reduced[x] if a not in bad), None)
        if pick is None:
            raise TwoPhaseError(2, x)
        colors[x] = pick
    return colors, derived, o  # type: ignore[return-value]


class HardInstance(NamedTuple):
    graph: Graph
    orientation: Orientation
    labels: list[int]
    group: Group
    derived: DerivedGraph


def c3t_hard_labeling(t: int) -> HardInstance:
    """Z3 labelling of T(C_3t) that admits no colouring.

    With edge ``u_i = v_i v_(i+1)`` of the cycle, the labelling is 1 on the
    derived edge ``u_(n-1) -> u_n``, 2 on ``u_n -> u_1``, and 0 elsewhere.
    In 0-based ids, ``u_i`` is cycle edge ``i - 1``.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    n = 3 * t
    base = cycle(n)
    derived = total_graph(base)
    tg = derived.graph
    z3 = make_group("Z3")
    u = {i: derived.edge_of(i - 1) for i in range(1, n + 1)}
    arcs = list(orient(tg).arcs)
    labels = [z3.zero()] * tg.m
    for tail, head, value in ((u[n - 1], u[n], 1), (u[n], u[1], 2)):
        e = tg.edge_index(tail, head)
        arcs[e] = (tail, head)
        labels[e] = value
    return HardInstance(tg, Orientation(tuple(arcs)), labels, z3, derived)
