from fractions import Fraction

import pytest

import vincular as v


def test_pattern_round_trip():
    p = v.Pattern("1-34-2")
    assert p.letters == [1, 3, 4, 2]
    assert p.adjacencies == [2]
    assert p.type == [1, 2, 1]
    assert str(p.reverse()) == "2-43-1"
    assert v.format_pattern(v.parse_pattern("13-42")) == "13-42"
    assert len(v.all_patterns([2, 2])) == 75


def test_parse_error_is_typed():
    with pytest.raises(v.ParseError):
        v.Pattern("1--2")
    with pytest.raises(v.VincularError):
        v.Pattern("13-4")


def test_matching():
    assert v.reduce("694614") == [3, 4, 2, 3, 1, 2]
    assert v.contains("24356213", "1-34-2")
    assert [0, 3, 4, 7] in v.find_occurrences([2, 4, 3, 5, 6, 2, 1, 3], "1-34-2")
    assert not v.contains("123", "12-34")


def test_counts():
    assert v.count_avoiders("11-12", 4, 2) == 15
    assert v.count_avoiders("11-12", 4, 2, prefix="2") == 8
    assert v.count_avoiders("11-12", 4, 2, content=[3, 1]) == 3
    assert v.avoider_counts("132-1", 3, 4) == [1, 4, 16, 64]
    with pytest.raises(v.GuardrailError):
        v.count_avoiders("1-2", 30, 9)


def test_equivalence_and_classes():
    assert v.verify_equivalence("132-1", "132-2", 7, 3)["passed"]
    r = v.verify_equivalence("11-12", "11-23", 6, 3)
    assert not r["passed"] and r["mismatches"]
    classes = v.classify([2, 1], 6, 3)
    assert sum(len(c) for c in classes) == len(v.all_patterns([2, 1]))


def test_bijections():
    r = v.biject("2.5", "215562213422116535443543654211", 6, sigma="11")
    assert r["output"] == "215562212234111125635443453456"
    assert len(r["stages"]) == 4
    back = v.biject("2.5", r["output"], 6, sigma="11", inverse=True)
    assert back["output"] == "215562213422116535443543654211"
    with pytest.raises(v.DomainError):
        v.biject("3.3a", "3656264116356143254163423", 6)
    u = v.biject("3.3a", "3656264116356143254163423", 6, unchecked=True)
    assert u["output"] == "3566246113566134245136423"


def test_generating_functions():
    g = v.gf("4.1", 1, order=6, pattern="111")
    assert g["coeffs"] == [1] * 7
    assert g["pattern"] == "111-2"
    assert all(isinstance(c, (int, Fraction)) for c in g["coeffs"])
    assert v.verify_gf("4.5", 4, 8)["passed"]
    bad = v.verify_gf("4.9", 4, 7, against="213-1")
    assert not bad["passed"] and bad["first_bad"] == 6
    with pytest.raises(v.DomainError):
        v.gf("4.10", 2)
    assert "4.10" in v.gf_tags()


def test_suite_runner():
    checks = v.run_criterion(1)
    assert checks and all(c["passed"] for c in checks)
