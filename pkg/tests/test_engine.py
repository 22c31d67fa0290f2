import itertools

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from totalgroup.derived import total_graph
from totalgroup.engine import (BUDGET, FAILS, HOLDS, Budget, BudgetExceeded, DimensionError,
                               PreconditionError, Solver, check_d_group_choosable,
                               check_group_choosable, check_group_colorable,
                               randomized_colorability, recheck_witness, solve,
                               validate_coloring)
from totalgroup.engine.bruteforce import naive_check, valid_colorings
from totalgroup.engine.checks import normalized_space_size
from totalgroup.graph import Orientation, build_graph, complete, cycle, orient, path, star
from totalgroup.groups import make_group

from strategies import graphs

Z2, Z3, Z4, S3 = (make_group(s) for s in ("Z2", "Z3", "Z4", "S3"))


def brute_colorings(g, o, group, f, lists=None):
    lists = lists or [range(group.order)] * g.n
    return [c for c in itertools.product(*lists)
            if all(group.sub(c[t], c[h]) != f[e] for e, (t, h) in enumerate(o.arcs))]


def test_solve_triangle():
    g = complete(3)
    o = orient(g)
    assert solve(g, o, Z2) is None  # three distinct colours needed
    c = solve(g, o, Z3)
    assert validate_coloring(g, o, Z3, None, None, c)


def test_solve_respects_lists_and_labels():
    g = path(3)
    o = orient(g)
    f = [1, 2]
    lists = [[0], [0, 1, 2], [2]]
    c = solve(g, o, Z3, f, lists)
    assert c[0] == 0 and c[2] == 2
    assert validate_coloring(g, o, Z3, f, lists, c)


def test_solver_node_budget():
    g = complete(6)
    with pytest.raises(BudgetExceeded):
        solve(g, orient(g), Z4, node_budget=3)


def test_dimension_errors():
    g = path(3)
    s = Solver(g, orient(g), Z3)
    with pytest.raises(DimensionError):
        s.solve([0], None)
    with pytest.raises(DimensionError):
        s.solve(None, [[0], [5], [1]])
    with pytest.raises(DimensionError):
        check_group_choosable(g, Z2, 3)
    with pytest.raises(DimensionError):
        check_d_group_choosable(star(4), Z3)


@given(graphs(max_n=5), st.sampled_from(["Z2", "Z3", "S3"]), st.data())
def test_solver_agrees_with_brute_force(g, spec, data):
    group = make_group(spec)
    o = orient(g, seed=data.draw(st.integers(0, 5)))
    f = data.draw(st.lists(st.integers(0, group.order - 1), min_size=g.m, max_size=g.m))
    lists = [data.draw(st.lists(st.integers(0, group.order - 1), min_size=1, unique=True))
             for _ in range(g.n)]
    c = solve(g, o, group, f, lists)
    expected = brute_colorings(g, o, group, f, lists)
    assert (c is None) == (not expected)
    if c is not None:
        assert tuple(c) in set(expected)


@given(graphs(max_n=5), st.sampled_from(["Z3", "S3"]), st.data())
def test_shift_invariance(g, spec, data):
    """c'(v) = t_v c(v) solves f'(x->y) = t_x f t_y^-1 exactly when c solves f."""
    group = make_group(spec)
    o = orient(g)
    q = group.order
    f = data.draw(st.lists(st.integers(0, q - 1), min_size=g.m, max_size=g.m))
    t = data.draw(st.lists(st.integers(0, q - 1), min_size=g.n, max_size=g.n))
    f2 = [group.op(group.op(t[x], f[e]), group.inverse(t[y])) for e, (x, y) in enumerate(o.arcs)]
    shifted = {tuple(group.op(t[v], c[v]) for v in range(g.n))
               for c in brute_colorings(g, o, group, f)}
    assert shifted == set(brute_colorings(g, o, group, f2))


@given(graphs(max_n=5), st.data())
def test_orientation_invariance(g, data):
    """Reversing an arc and inverting its label leaves the colourings unchanged."""
    o = orient(g)
    f = data.draw(st.lists(st.integers(0, 5), min_size=g.m, max_size=g.m))
    flip = data.draw(st.sets(st.integers(0, max(g.m - 1, 0)))) if g.m else set()
    o2 = o.flip(flip)
    f2 = [S3.inverse(f[e]) if e in flip else f[e] for e in range(g.m)]
    assert set(brute_colorings(g, o, S3, f)) == set(brute_colorings(g, o2, S3, f2))


@pytest.mark.parametrize("g", [path(2), complete(3), cycle(4), star(3), path(4),
                               build_graph(4, [(0, 1), (2, 3)])], ids=lambda g: g.name or "2K2")
@pytest.mark.parametrize("group", [Z2, Z3], ids=lambda a: a.name)
def test_checks_match_naive_oracle(g, group):
    o = orient(g)
    assert check_group_colorable(g, group, orientation=o).holds == naive_check(g, group, None, o)[0]
    for k in range(1, group.order + 1):
        got = check_group_choosable(g, group, k, orientation=o).holds
        assert got == naive_check(g, group, [k] * g.n, o)[0]
    if group.order >= g.max_degree:
        got = check_d_group_choosable(g, group, orientation=o).holds
        assert got == naive_check(g, group, g.degrees(), o)[0]


def test_c4_d_choosable_depends_on_group():
    assert not check_d_group_choosable(cycle(4), Z2).holds
    assert check_d_group_choosable(cycle(4), Z3).holds


@given(graphs(max_n=5))
def test_choosability_is_monotone_in_k(g):
    results = [check_group_choosable(g, Z3, k).holds for k in (1, 2, 3)]
    assert results == sorted(results)


def test_failure_carries_confirmed_witness():
    tg = total_graph(cycle(3)).graph
    v = check_group_colorable(tg, Z3)
    assert v.status == FAILS and v.confirmed
    w = v.witness
    o = Orientation(tuple(map(tuple, w["orientation"])))
    assert recheck_witness(tg, o, Z3, w["labels"], w["lists"])
    assert solve(tg, o, Z3, w["labels"], w["lists"]) is None


def test_total_cycles_over_z4():
    for n in (3, 4, 5):
        assert check_group_colorable(total_graph(cycle(n)).graph, Z4).holds


def test_zero_budget_is_budget_exceeded():
    for b in (Budget(nodes=0), Budget(seconds=0), Budget(instances=0)):
        v = check_group_colorable(complete(3), Z3, budget=b)
        assert v.status == BUDGET


def test_instance_cap_reports_budget():
    tg = total_graph(cycle(5)).graph
    v = check_group_colorable(tg, Z4, budget=Budget(instances=10))
    assert v.status == BUDGET and v.stats["bound"] == "instances"
    # a failure inside the cap is still a complete answer
    v = check_group_choosable(total_graph(path(6)).graph, Z4, 2, budget=Budget(instances=10))
    assert v.status == FAILS


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("TOTALGROUP_BUDGET_NODES", "0")
    assert Budget.from_env().is_zero()
    assert check_group_colorable(path(3), Z2).status == BUDGET


def test_normalized_space_size_counts_instances():
    tg = total_graph(cycle(4)).graph
    v = check_group_colorable(tg, Z4)
    assert v.holds
    assert v.stats["instances"] == normalized_space_size(tg, Z4, None)


def test_peeling_makes_trees_trivial():
    v = check_group_choosable(total_graph(star(3)).graph, make_group("Z4"), 4)
    assert v.holds and v.stats["core_vertices"] == 0


def test_randomized_is_seeded():
    tg = total_graph(cycle(4)).graph
    a = randomized_colorability(tg, make_group("Z5"), 50, seed=7)
    b = randomized_colorability(tg, make_group("Z5"), 50, seed=7)
    assert a.failure_count == 0 and a.failures == b.failures
    planted = [[0] * complete(3).m]
    rep = randomized_colorability(complete(3), Z2, 3, planted=planted)
    assert rep.failures[0]["trial"] == 0


def test_truth_table_shape():
    g = path(3)
    table = valid_colorings(g, orient(g), Z3, [0, 0])
    assert table.shape == (3, 3, 3) and table.sum() == 12


def test_precondition_error_is_value_error():
    assert issubclass(PreconditionError, ValueError)
