import pytest

import moy


def test_unknot_binomial():
    d = moy.Diagram.builtin("unknot")
    assert moy.evaluate(d, "c0=1", 2) == {2: 1, -2: 1}
    assert moy.evaluate_text(d, "c0=1", 2) == "q^{1/2} + q^{-1/2}"


def test_parse_round_trip():
    for name in moy.builtin_names():
        d = moy.Diagram.builtin(name)
        assert moy.Diagram.parse(d.serialize()) == d


def test_cycles_report():
    report = moy.cycles(moy.Diagram.builtin("theta"))
    assert len(report["cycles"]) == 3
    assert [c["rot"] for c in report["cycles"]] == [0, 1, 1]
    pairing = report["pairing_halves"]
    assert pairing[1][2] == -pairing[2][1]


def test_series_matches_table():
    d = moy.Diagram.builtin("tetrahedron")
    assert moy.series(d, 3) == moy.table(d, 3)


def test_classical_sums_to_power():
    d = moy.Diagram.builtin("theta")
    assert sum(moy.classical(d, 4).values()) == 3**4


def test_homfly_unknot_linear_term():
    f = moy.homfly(moy.Diagram.builtin("unknot"), 2, 8)
    assert f["c0=1"] == {(-2, 2): 1, (-2, 6): 1, (2, 2): -1, (2, 6): -1}


@pytest.mark.parametrize("suite", ["thm1", "thm2", "weights", "mu"])
def test_suites_pass(suite):
    ok, lines = moy.check(moy.Diagram.builtin("tetrahedron"), suite, n=3)
    assert ok and lines


def test_thm3_suite():
    ok, lines = moy.check(moy.Diagram.builtin("theta"), "thm3", n=2, max_x_degree=3, q_order=24)
    assert ok, lines


def test_errors_become_value_errors():
    d = moy.Diagram.builtin("theta")
    with pytest.raises(ValueError):
        moy.evaluate(d, "e0=1", 2)
    with pytest.raises(ValueError):
        moy.Diagram.parse("{")
    with pytest.raises(ValueError):
        moy.homfly(moy.Diagram.builtin("tetrahedron"), 2, 8)
