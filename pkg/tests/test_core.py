import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from insdel.core import (EPS, ABtoAC, AtoAlpha, AtoBC, AtoEps, Grammar, Kind, NotPenttonen,
                         Production, SizeVector, check_minimality, classify_production, dele,
                         ins, show, size_of_rules, total_weight, validate_penttonen, word)

from conftest import rules

N3 = Grammar.build("S A B C".split(), "a b".split(), "S", [])


def prod(lhs, rhs, i=1):
    return Production(i, word(lhs), word(rhs))


def test_word_roundtrip():
    assert word("eps") == EPS == word("")
    assert word("A #P1_2 b") == ("A", "#P1_2", "b")
    assert show(EPS) == "eps"
    with pytest.raises(ValueError):
        word("a eps")


def test_rule_body_nonempty():
    with pytest.raises(ValueError):
        ins("a", "", "b")


@pytest.mark.parametrize("lhs, rhs, expected", [
    ("A B", "A C", ABtoAC("A", "B", "C")),
    ("A", "B C", AtoBC("A", "B", "C")),
    ("A", "a", AtoAlpha("A", "a")),
    ("A", "B", AtoAlpha("A", "B")),
    ("A", "eps", AtoEps("A")),
])
def test_classify(lhs, rhs, expected):
    assert classify_production(prod(lhs, rhs), N3) == expected


@pytest.mark.parametrize("lhs, rhs", [
    ("A B", "C D"), ("A B", "C B"), ("a B", "a C"), ("A", "a b c"), ("A", "a B"),
    ("A B C", "A B"), ("A B", "A c"),
])
def test_classify_rejects(lhs, rhs):
    g = Grammar.build("S A B C D".split(), "a b c".split(), "S", [])
    with pytest.raises(NotPenttonen):
        classify_production(prod(lhs, rhs), g)


def test_validate_examples():
    g = Grammar.build("S A B C'".split(), "a b".split(), "S",
                      [("S", "A C'"), ("C'", "S B"), ("S", "eps"), ("A", "a"), ("B", "b")])
    assert validate_penttonen(g) == []

    bad = Grammar.build("S".split(), "a b c".split(), "S", [("S", "a b c")])
    assert [(v.kind, v.index) for v in validate_penttonen(bad)] == [("NotPenttonen", 1)]

    nostart = Grammar.build("A".split(), "a".split(), "S", [("A", "a")])
    assert [v.kind for v in validate_penttonen(nostart)] == ["StartNotNonterminal"]


def test_validate_reserved_and_overlap():
    g = Grammar.build("S #Q".split(), "S".split(), "S", [])
    kinds = {v.kind for v in validate_penttonen(g)}
    assert {"ReservedSymbol", "AlphabetOverlap"} <= kinds


@given(st.sampled_from(list("SABC")), st.sampled_from(list("SABCab")),
       st.sampled_from(list("SABCab")), st.integers(0, 3))
def test_classification_partitions(a, x, y, shape):
    """Exactly one class matches a valid production; shape decides which."""
    lhs, rhs = [((a,), ()), ((a,), (x,)), ((a,), (x, y)), ((a, x), (a, y))][shape]
    valid = shape < 2 or (x in N3.nonterminals and y in N3.nonterminals)
    p = Production(1, lhs, rhs)
    if not valid:
        with pytest.raises(NotPenttonen):
            classify_production(p, N3)
        return
    assert type(classify_production(p, N3)) is [AtoEps, AtoAlpha, AtoBC, ABtoAC][shape]


def test_size_examples():
    assert size_of_rules([ins("A", "P", "")], [dele("", "P B", "")]) == (1, 1, 0, 2, 0, 0)
    assert size_of_rules([], []) == SizeVector()
    assert size_of_rules([ins("", "P Q", "")], [dele("P", "B", "")]) == (2, 0, 0, 1, 1, 0)
    with pytest.raises(ValueError):
        size_of_rules([dele("", "a", "")], [])


@pytest.mark.parametrize("sv, weight, minimal", [
    (SizeVector(1, 1, 0, 2, 0, 0), 4, True),
    (SizeVector(2, 0, 0, 1, 1, 0), 4, True),
    (SizeVector(), 0, False),
    (SizeVector(1, 0, 0, 2, 0, 0), 3, False),
])
def test_weight_and_minimality(sv, weight, minimal):
    assert total_weight(sv) == weight
    assert check_minimality(sv) is minimal
    assert str(sv).startswith("(") and ";" in str(sv)


@settings(max_examples=300)
@given(st.lists(rules(Kind.INS), max_size=5), st.lists(rules(Kind.DEL), max_size=5),
       rules())
def test_size_monotone(I, D, extra):
    before = size_of_rules(I, D)
    if extra.kind is Kind.INS:
        after = size_of_rules(I + [extra], D)
    else:
        after = size_of_rules(I, D + [extra])
    assert before.dominated_by(after)
    if check_minimality(after):
        assert total_weight(after) >= 4
