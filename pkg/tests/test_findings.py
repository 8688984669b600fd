"""Counterexamples to soundness of the second construction.

In the second construction membrane 3 holds context-free insertions
``(eps, B #P3_i, eps; in)`` for a split A -> BC, and ``(eps, #P3_i C, eps;
in)`` for AB -> AC.  They fire on any word in membrane 3, including a word
that is half way through simulating a different production, and the
foreign marker is later removed by the context-free ``(eps, #P3_i, eps;
out)`` of membrane 2.  The net effect is an unlicensed nonterminal.

The first construction anchors every inner rule on a marker of its own
production and shows no such behaviour.
"""
from insdel.compilers import compile_t1, compile_t2
from insdel.core import word
from insdel.engine import Bounds, apply_rule
from insdel.grammars import single
from insdel.membrane import OUT, resolve_target, run, trace_witness
from insdel.oracle import rewrite_once
from insdel.verifier import EQUAL, MISMATCH, verify


def test_g_ctx_gains_a_word(g_ctx):
    rep = verify(g_ctx, 2, Bounds(2, 12, 60))
    assert rep.grammar_exhausted and rep.system_exhausted
    assert rep.extra == {word("a a")}
    assert not rep.missing
    assert rep.verdict == MISMATCH
    assert verify(g_ctx, 1, Bounds(2, 12, 60)).verdict == EQUAL


def test_g_eps_gains_the_same_word(g_eps):
    rep = verify(g_eps, 2, Bounds(2, 12, 60))
    assert rep.extra == {word("a a")}


def test_witness_borrows_a_foreign_marker(g_ctx):
    sys = compile_t2(g_ctx)
    tr = trace_witness(sys, "a a", Bounds(2, 12, 60))
    for s in tr:  # a genuine computation of the compiled system
        assert s.after in apply_rule(s.before, s.rule)
        assert s.dest in resolve_target(sys.tree, s.region, s.rule.target)
    assert tr.steps[-1].dest == OUT
    words = [w for w, _ in tr.words()]
    # simulating AB -> AC (production 2) deletes B, then the split S -> AB
    # (production 1) inserts "A #P3_1" in its place
    assert (word("A #P1_2 #P2_2 #X"), 3) in tr.words()
    assert word("A #X A") in words
    assert word("A #X A #P3_1") in words


def test_context_rule_applies_after_another_a():
    sys = compile_t2(single("A B", "A C")).with_axioms({1: [word("A B A")]})
    skin = run(sys, Bounds(3, 10, 12)).final.contents[1]
    assert word("A A C") in skin
    (prod,) = single("A B", "A C").productions
    assert rewrite_once(word("A B A"), prod) == [word("A C A")]  # the only licensed rewrite
    tr = trace_witness(sys, "A A C", Bounds(3, 10, 12), region=1)
    assert [w for w, _ in tr.words()][2:4] == [word("A #P1_1 #P2_1 A"),
                                               word("A #P1_1 #P2_1 A #P3_1 C")]


def test_first_construction_keeps_context():
    sys = compile_t1(single("A B", "A C")).with_axioms({1: [word("A B A")]})
    skin = run(sys, Bounds(3, 10, 12)).final.contents[1]
    assert word("A C A") in skin
    assert word("A A C") not in skin
