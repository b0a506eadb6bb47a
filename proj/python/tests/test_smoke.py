import pytest

import cdsw


def test_root_data():
    assert len(cdsw.positive_roots("B", 3)) == 9
    assert cdsw.dual_coxeter_number("G", 2) == 4
    assert cdsw.invariant_degrees("F", 4) == [2, 6, 8, 12]
    assert cdsw.cartan_matrix("A", 2) == [[2, -1], [-1, 2]]


@pytest.mark.parametrize("t,r", [("A", 3), ("B", 3), ("G", 2), ("E", 6)])
def test_peterson_count(t, r):
    assert len(cdsw.abelian_ideals(t, r)) == 2**r


def test_abelian_ideals_report():
    rep = cdsw.abelian_ideals_report("G", 2)
    assert rep["count"] == 4
    assert rep["discrepancy_at_g"] > 0


def test_run_sl3_all_pass():
    rep = cdsw.run("A", 2)
    assert rep["exit_code"] == 0
    assert {c["verdict"] for c in rep["checks"]} == {"pass"}
    assert "timing" in rep


def test_run_modular_is_probabilistic():
    rep = cdsw.run("A", 1, checks=["cdsw-ii", "cdsw-iii"], mode="modular", seed=3)
    assert rep["field"]["probabilistic"] is True
    assert all(c["verdict"] == "pass" for c in rep["checks"])


def test_s_powers_and_dims():
    assert cdsw.s_power_in_ideal("A", 2, 3)
    assert not cdsw.s_power_in_ideal("A", 2, 2)
    assert cdsw.invariant_dims("A", 2, 2) == {"A": 1, "E": 2, "L": 1}


def test_newton():
    f2 = cdsw.newton_f(2)
    assert f2[(3, 0)] == "-1/2"
    assert f2[(1, 1)] == "3/2"


def test_export():
    doc = cdsw.export("A", 1)
    assert doc["dim"] == 3
    assert len(doc["representations"]) == 2


def test_errors():
    with pytest.raises(cdsw.ConfigError):
        cdsw.run("A", 2, checks="nosuch")
    with pytest.raises(ValueError):
        cdsw.positive_roots("Q", 2)
    with pytest.raises(cdsw.ComponentTooLarge):
        cdsw.s_power_in_ideal("B", 4, 2)
