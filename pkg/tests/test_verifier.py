import time

import pytest

from insdel.core import word
from insdel.engine import Bounds
from insdel.grammars import bundled, single
from insdel.compilers import compile_t1, compile_t2
from insdel.membrane import MembraneTree, PSystemDef, run, trace_witness
from insdel.verifier import (EQUAL, GOLDEN, INCOMPLETE, MISMATCH, ChainDiverged, Report,
                             diagnose_blocked, golden_system, oracle_bounds_for, replay_golden,
                             verify)


def W(*texts):
    return frozenset(word(t) for t in texts)


def test_verify_t1_g_ab(g_ab):
    rep = verify(g_ab, 1, Bounds(4, 14, 80))
    assert rep.verdict == EQUAL
    assert rep.system_slice == W("eps", "a b", "a a b b")


@pytest.mark.xfail(strict=True, reason="context-free marker insertions of the second "
                   "construction interfere across productions; see test_findings.py")
def test_verify_t2_g_ctx(g_ctx):
    rep = verify(g_ctx, 2, Bounds(2, 12, 60))
    assert rep.verdict == EQUAL
    assert rep.system_slice == W("a b", "a c")


def test_verify_tight_bounds_incomplete(g_ab):
    rep = verify(g_ab, 1, Bounds(4, 5, 3))
    assert rep.verdict == INCOMPLETE
    assert word("a a b b") in rep.missing
    assert not (rep.system_exhausted and rep.grammar_exhausted)


def test_oracle_bounds_dominate():
    b = Bounds(3, 7, 20, 1000)
    ob = oracle_bounds_for(b)
    assert ob.max_output_len == 3
    assert ob.max_intermediate_len >= 9 and ob.max_steps >= 20 and ob.max_strings == 1000


def _report(grammar, system, ge, se):
    b = Bounds(2, 4, 4)
    return Report(1, W(*grammar), W(*system), ge, se, (b, b))


@pytest.mark.parametrize("grammar,system,ge,se,verdict", [
    (["a"], ["a"], False, False, EQUAL),
    (["a"], ["a", "b"], True, False, MISMATCH),
    (["a"], ["a", "b"], False, True, INCOMPLETE),
    (["a", "b"], ["a"], False, True, MISMATCH),
    (["a", "b"], ["a"], True, False, INCOMPLETE),
    (["a", "b"], ["a"], False, False, INCOMPLETE),
])
def test_verdict_rules(grammar, system, ge, se, verdict):
    rep = _report(grammar, system, ge, se)
    assert rep.verdict == verdict
    assert (rep.verdict == EQUAL) == (not rep.missing and not rep.extra)


def test_summary_is_stable(g_ctx):
    text = verify(g_ctx, 1, Bounds(2, 12, 60)).summary()
    assert text.splitlines()[0] == "verdict: equal"
    assert "grammar slice (2):\n  a b\n  a c\n" in text
    assert "extra (0):" in text
    assert text == verify(g_ctx, 1, Bounds(2, 12, 60)).summary()


@pytest.mark.parametrize("trace_id", list(GOLDEN))
def test_replay_golden(trace_id):
    t0 = time.perf_counter()
    tr = replay_golden(trace_id)
    assert time.perf_counter() - t0 < 1
    assert tr.words() == GOLDEN[trace_id][2]


def test_golden_lengths():
    assert len(GOLDEN["T2-ABAC"][2]) == 7      # AB, six rewrites to AC
    assert GOLDEN["T2-Aalpha"][2][-2:] == [(word("a #P2_1"), 2), (word("a"), 1)]


@pytest.mark.parametrize("trace_id", list(GOLDEN))
def test_golden_found_by_trace_witness(trace_id):
    chain = GOLDEN[trace_id][2]
    target, region = chain[-1]
    tr = trace_witness(golden_system(trace_id), target, Bounds(len(target), 10, 12),
                       region=region)
    assert tr.words() == chain


def test_replay_negative_control():
    sys = golden_system("T2-ABAC")
    rules = {r: [x for x in rs if "#P3_1" not in x.body or x.kind.value != "ins"]
             for r, rs in sys.rules.items()}
    with pytest.raises(ChainDiverged) as exc:
        replay_golden("T2-ABAC", sys.with_rules(rules))
    assert exc.value.index == 3


def test_diagnose_t2_split_blocks_in_membrane_4():
    sys = compile_t2(single("A", "B C")).with_axioms({1: [word("A")]})
    blocked = diagnose_blocked(sys, Bounds(2, 10, 12))
    assert any(r == 4 for r, _ in blocked)
    # the double insertion of B #P3_1 leaves the marker pair unmatched
    assert (4, word("B #P3_1 B #P3_1 #P2_1 C")) in blocked
    assert run(sys, Bounds(2, 10, 12)).language == frozenset()  # B C is not terminal


def test_diagnose_no_rules():
    tree = MembraneTree.linear(2)
    sys = PSystemDef(frozenset("ab"), frozenset("ab"), tree,
                     {1: frozenset({word("a")}), 2: frozenset({word("b")})}, {})
    assert diagnose_blocked(sys, Bounds(1, 3, 3)) == {(1, word("a")), (2, word("b"))}


def test_diagnose_t1_context_without_b():
    sys = compile_t1(single("A B", "A C")).with_axioms({1: [word("A #X")]})
    blocked = diagnose_blocked(sys, Bounds(2, 8, 10))
    assert (3, word("A #P1_1 #P2_1 #X")) in blocked


@pytest.mark.parametrize("name", ["g_ab", "g_ctx", "g_eps"])
def test_t1_sound_on_small_grid(name):
    g = bundled(name)
    for L in (1, 2, 3):
        for S in (10, 30):
            assert not verify(g, 1, Bounds(L, L + 6, S)).extra
