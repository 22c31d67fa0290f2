"""The compiled kernels and their interpreted source must agree exactly."""

import numpy as np
import pytest

from totalgroup import _accel
from totalgroup.derived import total_graph
from totalgroup.engine import Solver, _kernels
from totalgroup.graph import complete, cycle, orient, path, wheel
from totalgroup.groups import make_group

pytestmark = pytest.mark.skipif(not _accel.USE_NUMBA, reason="numba backend not active")


def _solver(g, spec):
    return Solver(g, orient(g), make_group(spec))


@pytest.mark.parametrize("g,spec", [(complete(4), "Z3"), (complete(4), "Z4"),
                                    (total_graph(cycle(4)).graph, "Z3"),
                                    (total_graph(wheel(4)).graph, "S3")])
def test_solve_kernel_backends_agree(g, spec):
    s = _solver(g, spec)
    rng = np.random.default_rng(0)
    for _ in range(25):
        labels = rng.integers(0, s.group.order, size=g.m).astype(np.int64)
        masks = s.masks_array(None)
        args = (s.order, s.pos, s.arc_ptr, s.arc_dst, s.arc_edge, s.arc_tail, s.mul, s.inv,
                labels, masks)
        c1 = np.zeros(g.n, dtype=np.int64)
        c2 = np.zeros(g.n, dtype=np.int64)
        r1 = _kernels.solve_kernel(*args, c1, np.int64(10**9))
        r2 = _kernels.solve_kernel.py_func(*args, c2, np.int64(10**9))
        assert tuple(map(int, r1)) == tuple(map(int, r2))
        assert np.array_equal(c1, c2)


def test_exhaust_kernel_backends_agree():
    g = total_graph(path(3)).graph
    s = _solver(g, "Z3")
    free = np.array([3, 5, 6], dtype=np.int64)
    lv = np.zeros(0, dtype=np.int64)
    choices = np.zeros((0, 1), dtype=np.int64)
    counts = np.zeros(0, dtype=np.int64)
    out = []
    for fn in (_kernels.exhaust_kernel, _kernels.exhaust_kernel.py_func):
        labels = np.zeros(g.m, dtype=np.int64)
        masks = s.masks_array(None)
        colors = np.zeros(g.n, dtype=np.int64)
        cache = np.zeros(1, dtype=np.int64)
        r = fn(s.order, s.pos, s.arc_ptr, s.arc_dst, s.arc_edge, s.arc_tail, s.mul, s.inv,
               s.tails, s.heads, labels, masks, free, np.int64(3), lv, choices, counts,
               np.int64(0), np.int64(27), np.int64(10**9), colors, cache)
        out.append((tuple(map(int, r)), labels.tolist()))
    assert out[0] == out[1]


def test_coloring_valid_backends_agree():
    g = cycle(5)
    s = _solver(g, "Z3")
    labels = np.zeros(g.m, dtype=np.int64)
    masks = s.masks_array(None)
    for colors in ([0, 1, 0, 1, 2], [0, 1, 0, 1, 0]):
        c = np.asarray(colors, dtype=np.int64)
        a = _kernels.coloring_valid(s.tails, s.heads, s.mul, s.inv, labels, masks, c)
        b = _kernels.coloring_valid.py_func(s.tails, s.heads, s.mul, s.inv, labels, masks, c)
        assert bool(a) == bool(b)


def test_backend_name():
    assert _accel.backend() == "numba"
