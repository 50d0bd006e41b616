from fractions import Fraction

import pytest

import ulog


def test_suite_names_in_order():
    names = ulog.suite_names()
    assert len(names) == 10
    assert names[0] == "tn"
    assert names[-1] == "sheffer"


def test_falling_factorials():
    rows = ulog.p_sequence("exp1", 3)
    assert rows[3] == [0, 2, -3, 1]


def test_omega_of_geom_is_catalan():
    om = ulog.family_series("geom", 6)["omega"]
    assert om == [0, 1, 1, 2, 5, 14, 42]


def test_q_coefficients():
    q = ulog.q_coefficients("exp1", 2)
    assert q[1] == {1: Fraction(-1, 2)}
    assert q[2] == {2: Fraction(1, 4), 1: Fraction(-1, 12)}


def test_run_suite_report():
    r = ulog.run_suite("nu-example")
    assert r["suite"] == "nu-example"
    assert all(c["status"] == "pass" for c in r["checks"])


def test_bad_family_raises():
    with pytest.raises(ValueError, match="column"):
        ulog.canonical_family("poly(1, x)")
    with pytest.raises(ValueError):
        ulog.run_suite("nonexistent")
