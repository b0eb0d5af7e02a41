from fractions import Fraction

import pytest

import levi_slope as ls


def test_gl6_degree_two():
    nodes, degree, phi = ls.minimal_parabolic(ls.gl(6), [0, 0, 0, 0, 0, 2])
    assert nodes == [1, 2, 4, 5]
    assert phi == [Fraction(1, 3)] * 6
    report = ls.analyze(ls.gl(6), [0, 0, 0, 0, 0, 2])
    assert report["schema"] == 1
    assert report["degree_P"]["block_degrees"] == [1, 1]
    assert report["relative_weyl"]["type"] == "A1"


def test_e7_relative_weyl_group():
    e7 = ls.simple("E7")
    lift = ls.degree_lift(e7, [1])
    nodes, _, _ = ls.minimal_parabolic(e7, lift)
    assert nodes == [2, 5, 7]
    w = ls.relative_weyl_type(e7, nodes)
    assert w["order"] == 1152
    assert w["type"] == "F4"
    assert w["faithful"]


def test_oracle_and_stability():
    d5 = ls.simple("D5")
    for k in range(4):
        lift = ls.degree_lift(d5, [k])
        assert ls.minimal_parabolic(d5, lift)[0] == ls.brute_force_parabolic(d5, lift)
    assert ls.stable_exists(ls.gl(5), [0, 0, 0, 0, 2])
    assert not ls.stable_exists(ls.simple("B3"), [1, 0, 0])


def test_data_and_labels():
    p = ls.product("gl2,G2")
    assert p.dynkin_type == "A1xG2"
    assert ls.from_json(ls.simple("C3", "simply_connected").to_json()).cartan == ls.simple("C3").cartan
    assert ls.pi1_torsion(ls.simple("D4")) == [2, 2]
    assert ls.normalize_coxeter_label("C_3") == "B3"
    assert ls.slope(ls.gl(2), [], [1, 0]) == [1, 0]


def test_table_and_verify():
    rows = ls.table(max_rank=4, families="BC")
    assert [r["weyl_c_label"] for r in rows if r["group"] == "B4"] == ["C3"]
    assert ls.verify(2)["passed"]


def test_errors():
    with pytest.raises(ValueError):
        ls.simple("Q5")
    with pytest.raises(ValueError):
        ls.minimal_parabolic(ls.gl(3), [1, 2])
    with pytest.raises(RuntimeError):
        ls.analyze(ls.simple("E7"), ls.degree_lift(ls.simple("E7"), [1]), orbit_cap=10)
