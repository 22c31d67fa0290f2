"""Naive oracle for the exhaustive checkers.

No peeling, no normalisation, no search: every labelling ``f`` in ``A^E`` is
enumerated, the full truth table of valid colourings over ``A^V`` is built
with numpy broadcasting, and list assignments are quantified by collapsing
one vertex axis at a time.  Only meant for graphs with a handful of vertices.
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from ..graph import Graph, Orientation, orient
from ..groups import Group

MAX_CELLS = 5_000_000


def valid_colorings(g: Graph, o: Orientation, group: Group, labels: Sequence[int]) -> np.ndarray:
    """Boolean array of shape ``(q,) * n``: entry ``c`` is True iff ``c`` satisfies ``labels``."""
    q, n = group.order, g.n
    if q ** n > MAX_CELLS:
        raise ValueError(f"{q}^{n} colourings is too many for the naive oracle")
    diff = np.array([[group.sub(a, b) for b in range(q)] for a in range(q)])
    table = np.ones((q,) * n, dtype=bool)
    for e, (t, h) in enumerate(o.arcs):
        ok = diff != labels[e]
        shape = [1] * n
        shape[t] = shape[h] = q
        table &= (ok if t < h else ok.T).reshape(shape)
    return table


def _every_list_meets(table: np.ndarray, families: Sequence[Sequence[tuple[int, ...]]]) -> bool:
    """True iff every product of subsets (one family per axis) contains a True cell."""
    r = table
    for axis in range(len(families)):
        r = np.moveaxis(r, 0, -1)  # the next untouched vertex axis is always first
        r = np.stack([r[..., list(s)].any(axis=-1) if s else np.zeros(r.shape[:-1], bool)
                      for s in families[axis]], axis=-1)
    return bool(r.all())


def naive_check(g: Graph, group: Group, sizes: Sequence[int] | None = None,
                orientation: Orientation | None = None) -> tuple[bool, list[int] | None]:
    """``(holds, first failing labelling)`` with full lists (``sizes=None``) or k-subsets."""
    o = orient(g) if orientation is None else orientation
    q = group.order
    families = None
    if sizes is not None:
        families = [list(itertools.combinations(range(q), min(k, q))) for k in sizes]
    for labels in itertools.product(range(q), repeat=g.m):
        table = valid_colorings(g, o, group, labels)
        ok = bool(table.any()) if families is None else _every_list_meets(table, families)
        if not ok:
            return False, list(labels)
    return True, None
