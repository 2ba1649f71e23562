from fractions import Fraction
import json
import os
import pathlib

import pytest

import quantnli as q

FIXTURES = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def test_interval_arithmetic():
    a = q.Interval(1, 3)
    b = q.Interval(2, 4, hi_open=True)
    s = a + b
    assert (s.lo, s.hi, s.lo_open, s.hi_open) == (3, 7, False, True)
    assert str(a * q.Interval.point(2)) == "[2, 6]"
    assert (a & b) == q.Interval(2, 3)
    assert q.Interval.point(Fraction(1, 2)).lo == Fraction(1, 2)


def test_interval_errors():
    with pytest.raises(q.IntervalError, match="division"):
        q.Interval(1, 2) / q.Interval(-1, 1)
    with pytest.raises(q.IntervalError):
        q.Interval(0, 1) & q.Interval(2, 3)
    with pytest.raises(ValueError):
        q.Interval(0, 1).setminus(q.Interval(Fraction(1, 3), Fraction(2, 3)))


def test_unbounded():
    above = q.Interval(50, None, lo_open=True)
    assert str(above) == "(50, +inf)"
    assert 51 in above and 50 not in above
    assert q.Interval(60, 70).issubset(above)


def test_normalize_number():
    assert q.normalize_number("2.5 million") == q.Interval.point(2_500_000)
    assert q.normalize_number("three dozen") == q.Interval.point(36)
    assert q.normalize_number("banana") is None


def test_parse():
    (n,) = q.parse("The company hired 40 engineers in March.")
    assert n["val"] == q.Interval.point(40)
    assert n["unit"] == "engineers"
    assert n["text"].startswith("40")


def test_classify_apples():
    r = q.classify("He bought 3 apples and ate 1 apple.", "He has 2 apples left.")
    assert r["label"] == "entailment"
    assert "P1 P2 - H1 =" in r["equations"][0]
    r2 = q.classify("He bought 3 apples and ate 1 apple.", "He has 2 apples left.", arity=2)
    assert r2["label"] == "entails"


def test_justify():
    eqs = q.justify("Sam had 8 marbles and lost 3 marbles.", "Sam has 5 marbles.")
    assert eqs and eqs[0] == "P1 P2 - H1 ="


def test_evaluate_fixture():
    rep = q.evaluate(str(FIXTURES / "corpora" / "awpnli_mini.jsonl"))
    assert rep["n"] == 12
    assert 0.0 <= rep["accuracy"] <= 1.0
    json.dumps(rep)
