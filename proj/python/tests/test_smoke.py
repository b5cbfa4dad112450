import json
import os
from fractions import Fraction

import pytest

import ultraword as uw

FIXTURES = os.environ.get(
    "ULTRAWORD_FIXTURES",
    os.path.join(os.path.dirname(__file__), "..", "..", "tests", "fixtures"),
)


def test_partition_points():
    assert uw.partition_point(2, 3, 2) == Fraction(15, 8)
    assert uw.partition_point(1, 0, 0) == 0
    pts = uw.enumerate_points(4, 0, 1, 1, q=2)
    assert pts == [(0, 0, Fraction(0)), (0, 1, Fraction(1, 8)), (1, 0, Fraction(1, 4)), (1, 1, Fraction(3, 8))]
    assert uw.verify_order_embedding(3, -4, 4, 6)
    # bounded interval: the closed endpoint row has only j = 0
    assert uw.enumerate_points(1, 0, 1, 2, q=1, m=1)[-1] == (1, 0, Fraction(1))


def test_inadmissible_index_raises():
    with pytest.raises(uw.UltrawordError):
        uw.partition_point(1, -1, 0, q=2)


def test_closure():
    closed, order = uw.closure({"a", "b", "c"}, [({"a"}, "b"), ({"a", "b"}, "c")], {"a"})
    assert closed == {"a", "b", "c"}
    assert order == [({"a"}, "b"), ({"a", "b"}, "c")]
    assert uw.closure_axioms_hold({"a", "b", "c"}, [({"a"}, "b"), ({"b"}, "c")])


def test_decomposition_counts():
    spec = {"q": 1, "K": 1, "m": 2}
    d = uw.decompose(spec, [(0, 0), (1, 0), (2, 0)])
    assert d["cardinalities"] == {"A": 0, "Q": 4, "d": 3, "total": 7}
    assert d["pairwise_disjoint"]
    assert uw.canonical_conjunction_count(5) == "26"
    assert uw.permutational_conjunction_count(3) == "12"
    word, conjuncts = uw.ultraword(spec, m=2, n=1)
    assert len(conjuncts) == 5
    assert word == " ∧ ".join(conjuncts)


def test_signatures():
    lang, rules = {"a", "b", "c"}, [({"a"}, "b"), ({"b"}, "c")]
    assert uw.theory_signature(lang, rules, {"a", "c"}) == [(["a"], "c")]
    assert uw.perceived_closure(lang, rules, {"a", "c"}, {"a"}) == {"a", "c"}
    obs = [({"a"}, {"b"}), ({"b"}, {"c"})]
    assert uw.converse_ri(obs) == [({"a"}, "b"), ({"b"}, "c")]
    assert uw.separate_vs_union(obs, {"a"}) == ({"a", "b"}, {"a", "b", "c"}, False)


def test_standard_part():
    assert uw.st_point([[0, "3/2"], [1, "5"], [2, "-1"]]) == Fraction(3, 2)
    with pytest.raises(uw.UltrawordError):
        uw.st_point([[-1, "1"]])
    out = uw.st({"arity": 4, "members": [[7, {"inf": "λ"}, [[0, "2"], [1, "1"]], "7"]]})
    assert out["St"] == [[0, 0, [[0, "2"]], [[0, "7"]]]]
    assert out["realism"] == out["St"]
    assert uw.st({"arity": 3, "members": []}) == {"St": [], "St_extended": [], "realism": []}


def test_cli_in_process():
    code, out, _ = uw.run_cli(["closure", "--rules", os.path.join(FIXTURES, "rules.json"), "--premises", "a"])
    assert code == 0
    assert json.loads(out)["closure"] == ["a", "b", "c"]
    code, out, err = uw.run_cli(["points", "--K", "0"])
    assert code == 2 and out == "" and "--K" in err
