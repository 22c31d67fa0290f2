"""Search kernels for (A, L, f)-colouring.

Conventions shared by every kernel:

* vertices are visited in ``order``; ``pos`` is its inverse;
* constraints are stored as arcs in CSR form keyed by source vertex; an arc
  ``src -> dst`` over edge ``e`` says "once ``src`` is coloured ``s``,
  ``dst`` may not take one value", namely ``inv[f(e)] * s`` when ``src`` is
  the tail of ``e`` and ``f(e) * s`` when it is the head;
* lists are int64 bit masks over group element indices (order <= 62).
"""

import numpy as np

from .._accel import kernel


@kernel
def solve_kernel(order, pos, arc_ptr, arc_dst, arc_edge, arc_tail, mul, inv,
                 labels, masks, colors, node_budget):
    """Complete backtracking with forward checking.

    Returns ``(status, nodes)`` with status 1 = coloured (``colors`` filled),
    0 = no colouring exists, -1 = node budget exhausted.
    """
    n = order.shape[0]
    if n == 0:
        return 1, 0
    dom = np.empty((n + 1, n), dtype=np.int64)
    for v in range(n):
        dom[0, v] = masks[v]
    rem = np.empty(n, dtype=np.int64)
    rem[0] = dom[0, order[0]]
    depth = 0
    nodes = 0
    one = np.int64(1)
    while True:
        cand = rem[depth]
        if cand == 0:
            if depth == 0:
                return 0, nodes
            depth -= 1
            continue
        s = 0
        while (cand >> s) & 1 == 0:
            s += 1
        rem[depth] = cand & (cand - 1)
        nodes += 1
        if nodes > node_budget:
            return -1, nodes
        v = order[depth]
        colors[v] = s
        for u in range(n):
            dom[depth + 1, u] = dom[depth, u]
        ok = True
        for a in range(arc_ptr[v], arc_ptr[v + 1]):
            u = arc_dst[a]
            if pos[u] > depth:
                lab = labels[arc_edge[a]]
                if arc_tail[a]:
                    forb = mul[inv[lab], s]
                else:
                    forb = mul[lab, s]
                d = dom[depth + 1, u] & ~(one << forb)
                dom[depth + 1, u] = d
                if d == 0:
                    ok = False
                    break
        if ok:
            depth += 1
            if depth == n:
                return 1, nodes
            rem[depth] = dom[depth, order[depth]]


@kernel
def coloring_valid(tails, heads, mul, inv, labels, masks, colors):
    for v in range(masks.shape[0]):
        if (masks[v] >> colors[v]) & 1 == 0:
            return False
    for e in range(tails.shape[0]):
        if mul[colors[tails[e]], inv[colors[heads[e]]]] == labels[e]:
            return False
    return True


@kernel
def exhaust_kernel(order, pos, arc_ptr, arc_dst, arc_edge, arc_tail, mul, inv,
                   tails, heads, labels, masks, free_edges, q,
                   list_vertices, list_choices, list_counts,
                   start, stop, node_budget, colors, cache_flag):
    """Walk instances ``start..stop-1`` of the normalised (L, f) space.

    The instance index is a mixed-radix number: list slots are the most
    significant digits, free edge labels the least (last free edge fastest).
    ``labels`` and ``masks`` hold the fixed parts and are overwritten in
    place.  A colouring that survives from the previous instance is reused
    without search.  Returns ``(status, index, nodes)``: status 1 = every
    instance coloured, 0 = ``index`` is uncolourable, -1 = node budget hit.
    """
    nl = list_vertices.shape[0]
    nf = free_edges.shape[0]
    nslots = nl + nf
    digits = np.zeros(nslots, dtype=np.int64)
    radix = np.empty(nslots, dtype=np.int64)
    for i in range(nl):
        radix[i] = list_counts[i]
    for j in range(nf):
        radix[nl + j] = q
    rest = start
    for i in range(nslots - 1, -1, -1):
        digits[i] = rest % radix[i]
        rest //= radix[i]
    for i in range(nl):
        masks[list_vertices[i]] = list_choices[i, digits[i]]
    for j in range(nf):
        labels[free_edges[j]] = digits[nl + j]
    nodes = 0
    idx = start
    while idx < stop:
        good = False
        if cache_flag[0] == 1:
            good = coloring_valid(tails, heads, mul, inv, labels, masks, colors)
        if not good:
            status, used = solve_kernel(order, pos, arc_ptr, arc_dst, arc_edge, arc_tail,
                                        mul, inv, labels, masks, colors, node_budget - nodes)
            nodes += used
            if status == 1:
                cache_flag[0] = 1
            elif status == 0:
                cache_flag[0] = 0
                return 0, idx, nodes
            else:
                cache_flag[0] = 0
                return -1, idx, nodes
        idx += 1
        i = nslots - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] < radix[i]:
                break
            digits[i] = 0
            if i >= nl:
                labels[free_edges[i - nl]] = 0
            else:
                masks[list_vertices[i]] = list_choices[i, 0]
            i -= 1
        if i >= nl:
            labels[free_edges[i - nl]] = digits[i]
        elif i >= 0:
            masks[list_vertices[i]] = list_choices[i, digits[i]]
    return 1, stop, nodes
