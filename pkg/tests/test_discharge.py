from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from totalgroup.catalog import (cube, dodecahedron, friendship, plane_catalog, plane_tree,
                                triangle_with_pendants)
from totalgroup.discharge import (FOUR_SCHEME, TOTAL_SCHEME, ChargeLedger, DisconnectedInput,
                                  ForbiddenCycle, KTooSmall, audit_no4cycle, audit_no45cycle,
                                  charge_sum, initial_charges)
from totalgroup.graph import build_graph, star
from totalgroup.plane import subdivide, tree_plane


@pytest.mark.parametrize("name", sorted(plane_catalog()))
def test_euler_charge_sums(name):
    pg = plane_catalog()[name]
    assert charge_sum(pg, TOTAL_SCHEME) == -12
    assert charge_sum(pg, "four-scheme") == -8


@given(st.integers(2, 15), st.integers(0, 500))
def test_tree_charge_sums(n, seed):
    pg = plane_tree(n, seed)
    assert charge_sum(pg, TOTAL_SCHEME) == -12
    assert charge_sum(pg, FOUR_SCHEME) == -8


def test_cube_charges():
    init = initial_charges(cube(), TOTAL_SCHEME)
    assert init["v0"] == 0 and init["f0"] == -2


def test_disconnected_input():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedInput):
        charge_sum(tree_plane(g), TOTAL_SCHEME)


def test_ledger_conserves():
    led = ChargeLedger({"v0": Fraction(1), "f0": Fraction(-1)})
    led.move("R", "v0", "f0", Fraction(1, 3))
    assert led.final() == {"v0": Fraction(2, 3), "f0": Fraction(-2, 3)}
    assert led.conserves()


def test_no4_audit_dodecahedron():
    rep = audit_no4cycle(dodecahedron(), 6)
    assert rep.total_initial() == rep.total_final() == -12
    assert rep.verdict == "property-fails"
    assert "4" in rep.failing_properties  # every edge has degree sum 6


def test_no4_errors():
    with pytest.raises(ForbiddenCycle):
        audit_no4cycle(cube(), 6)
    with pytest.raises(KTooSmall):
        audit_no4cycle(dodecahedron(), 5)
    with pytest.raises(KTooSmall):
        audit_no4cycle(tree_plane(star(7)), 6)


def test_no45_audit():
    rep = audit_no45cycle(subdivide(dodecahedron()), 5)
    assert rep.total_initial() == rep.total_final() == -8
    assert rep.ledger.conserves()
    assert not rep.all_properties_hold
    with pytest.raises(ForbiddenCycle):
        audit_no45cycle(dodecahedron(), 5)
    with pytest.raises(KTooSmall):
        audit_no45cycle(subdivide(dodecahedron()), 4)


@pytest.mark.parametrize("make", [lambda: friendship(3), triangle_with_pendants,
                                  lambda: plane_tree(10, 1)])
def test_audits_conserve_charge(make):
    pg = make()
    k = max(6, pg.graph.max_degree)
    for audit, total in ((audit_no4cycle, -12), (audit_no45cycle, -8)):
        rep = audit(pg, k)
        assert rep.total_final() == total
        assert rep.ledger.conserves()
        # graphs with a vertex of degree below 3 violate the minimum-degree property
        assert rep.verdict == "property-fails"


def test_report_json_is_exact():
    data = audit_no4cycle(dodecahedron(), 6).to_json()
    assert data["total_final"] == "-12"
    assert all(isinstance(v, str) for v in data["final"].values())
