import json
from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from totalgroup.groups import (ElementError, GroupSpecError, cyclic_product, default_groups,
                               from_table, load_group_table, make_group, symmetric_group,
                               validate_table)

SPECS = ["Z2", "Z3", "Z5", "Z2xZ2", "Z2xZ4", "Z3xZ3", "S3", "Z2xZ2xZ2"]


@pytest.mark.parametrize("spec", SPECS)
def test_axioms(spec):
    g = make_group(spec)
    q = g.order
    for a, b, c in product(range(q), repeat=3):
        assert g.op(g.op(a, b), c) == g.op(a, g.op(b, c))
    for a in range(q):
        assert g.op(a, g.zero()) == a == g.op(g.zero(), a)
        assert g.op(a, g.inverse(a)) == g.zero()
        assert g.sub(a, a) == g.zero()


def test_orders_and_abelian():
    assert [make_group(s).order for s in ("Z4", "Z2xZ4", "S3", "S4")] == [4, 8, 6, 24]
    assert make_group("Z2xZ4").is_abelian()
    assert not make_group("S3").is_abelian()


def test_mixed_radix_coordinates():
    g = make_group("Z2xZ4")
    # first factor is the most significant digit
    assert g.element((1, 3)) == 7
    assert g.coords(5) == (1, 1)
    assert g.op(g.element((1, 3)), g.element((1, 2))) == g.element((0, 1))


def test_klein_is_not_z4():
    k = make_group("Z2xZ2")
    assert all(k.op(a, a) == 0 for a in range(4))
    z4 = make_group("Z4")
    assert z4.op(1, 1) == 2


def test_bad_specs():
    for spec in ("Q8", "Z1", "Zx", "Z2*Z3", ""):
        with pytest.raises(GroupSpecError):
            make_group(spec)
    with pytest.raises(ElementError):
        make_group("Z3").op(0, 3)
    with pytest.raises(ElementError):
        make_group("Z2xZ3").element((2, 0))


def test_table_validation():
    # Z3 written with identity 1
    t = [[2, 0, 1], [0, 1, 2], [1, 2, 0]]
    assert validate_table(t) == 1
    g = from_table(t)
    assert g.zero() == 1 and g.inverse(0) == 2
    with pytest.raises(GroupSpecError):
        validate_table([[0, 1], [1, 1]])  # no inverse for 1
    with pytest.raises(GroupSpecError):
        validate_table([[0, 1], [1, 2]])  # not closed
    # a latin square that is not associative
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(GroupSpecError, match="associative"):
        validate_table(loop)


def test_table_json_roundtrip(tmp_path):
    s3 = symmetric_group(3)
    path = tmp_path / "s3.json"
    path.write_text(json.dumps(s3.to_json()))
    g = load_group_table(path)
    assert g.order == 6 and np.array_equal(g.table, s3.table)
    assert make_group(str(path)).order == 6
    with pytest.raises(GroupSpecError):
        make_group({"order": 5, "table": s3.to_json()["table"]})


def test_default_catalog():
    names = [g.name for g in default_groups()]
    assert "S3" in names and "Z2xZ2" in names
    assert len(set(names)) == len(names)


@given(st.lists(st.integers(2, 5), min_size=1, max_size=3), st.data())
def test_cyclic_product_matches_coordinatewise_addition(moduli, data):
    g = cyclic_product(moduli)
    a = data.draw(st.integers(0, g.order - 1))
    b = data.draw(st.integers(0, g.order - 1))
    want = tuple((x + y) % m for x, y, m in zip(g.coords(a), g.coords(b), moduli))
    assert g.coords(g.op(a, b)) == want
