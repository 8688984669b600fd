"""Bounded equivalence checks between grammars and compiled systems."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .compilers import compile_t1, compile_t2, compile_theorem
from .core import Grammar, Word, show, word
from .engine import Bounds, apply_rule
from .formats import sort_words
from .grammars import single
from .membrane import PSystemDef, Trace, TraceStep, resolve_target, run
from .oracle import derive_bfs

EQUAL = "equal"
INCOMPLETE = "incomplete_bounds"
MISMATCH = "mismatch"


ORACLE_MIN_STEPS = 100


def oracle_bounds_for(bounds: Bounds) -> Bounds:
    """Oracle bounds dominating the system's.

    Every grammar form simulated by the system within ``bounds`` is at most
    B long and needs at most S grammar steps, so (L, B+2, S) already covers
    the system.  The oracle is cheap, so it is widened further to the
    default 2L+4 and at least ``ORACLE_MIN_STEPS`` steps: a fuller grammar
    slice turns more reports into a decision, and both mismatch rules stay
    sound whatever the oracle's bounds are.
    """
    L = bounds.max_output_len
    return Bounds(L, max(bounds.max_intermediate_len + 2, 2 * L + 4),
                  max(bounds.max_steps, ORACLE_MIN_STEPS), bounds.max_strings)


@dataclass(frozen=True)
class Report:
    theorem: int
    grammar_slice: frozenset[Word]
    system_slice: frozenset[Word]
    grammar_exhausted: bool
    system_exhausted: bool
    bounds_used: tuple[Bounds, Bounds]  # (system, oracle)

    @property
    def missing(self) -> frozenset[Word]:
        return self.grammar_slice - self.system_slice

    @property
    def extra(self) -> frozenset[Word]:
        return self.system_slice - self.grammar_slice

    @property
    def verdict(self) -> str:
        if not self.missing and not self.extra:
            return EQUAL
        # a complete oracle slice makes any extra word conclusive, and a
        # complete system slice makes any missing word conclusive
        if (self.extra and self.grammar_exhausted) or (self.missing and self.system_exhausted):
            return MISMATCH
        return INCOMPLETE

    def summary(self) -> str:
        def block(title, words):
            ws = sort_words(words)
            return [f"{title} ({len(ws)}):"] + [f"  {show(w)}" for w in ws]

        sb, ob = self.bounds_used
        lines = [f"verdict: {self.verdict}",
                 f"theorem: {self.theorem}",
                 f"system bounds: {sb}",
                 f"oracle bounds: {ob}",
                 f"system exhausted: {str(self.system_exhausted).lower()}",
                 f"oracle exhausted: {str(self.grammar_exhausted).lower()}"]
        lines += block("grammar slice", self.grammar_slice)
        lines += block("system slice", self.system_slice)
        lines += block("missing", self.missing)
        lines += block("extra", self.extra)
        return "\n".join(lines) + "\n"


def verify(g: Grammar, theorem: int, bounds: Bounds,
           oracle_bounds: Optional[Bounds] = None) -> Report:
    sys = compile_theorem(g, theorem)
    ob = oracle_bounds or oracle_bounds_for(bounds)
    res = run(sys, bounds)
    orc = derive_bfs(g, ob)
    return Report(theorem, orc.language, res.language, orc.exhausted, res.exhausted,
                  (bounds, ob))


# ------------------------------------------------------------ golden chains

class ChainDiverged(AssertionError):
    def __init__(self, trace_id: str, index: int, expected, here):
        (w0, r0), (w1, r1) = here, expected
        super().__init__(
            f"{trace_id}: step {index} cannot go from {show(w0)} in region {r0} "
            f"to {show(w1)} in region {r1}")
        self.trace_id = trace_id
        self.index = index


def _chain(*items: str) -> list[tuple[Word, int]]:
    out = []
    for it in items:
        w, _, r = it.rpartition("@")
        out.append((word(w), int(r)))
    return out


# (grammar, construction, chain of "word@region"); production index 1, w1 = w2 = eps
GOLDEN: dict[str, tuple[Grammar, int, list[tuple[Word, int]]]] = {
    "T2-ABAC": (single("A B", "A C"), 2, _chain(
        "A B@1", "A #P1_1 #P2_1 B@2", "A #P1_1 #P2_1@3", "A #P1_1 #P2_1 #P3_1 C@4",
        "A #P2_1 #P3_1 C@3", "A #P3_1 C@2", "A C@1")),
    "T2-ABC": (single("A", "B C"), 2, _chain(
        "A@1", "#P1_1 #P2_1 A@2", "#P1_1 #P2_1@3", "B #P3_1 #P1_1 #P2_1@4",
        "B #P3_1 #P2_1@5", "B #P3_1 #P2_1 #P4_1 C@4", "B #P3_1 #P2_1 C@3",
        "B #P3_1 C@2", "B C@1")),
    "T2-Aalpha": (single("A", "a"), 2, _chain(
        "A@1", "a #P3_1 A@2", "a #P3_1@3", "a #P3_1 #P1_1 #P2_1@4", "a #P1_1 #P2_1@3",
        "a #P2_1@2", "a@1")),
    "T1-ABAC-prose": (single("A B", "A C"), 1, _chain(
        "A B@1", "A #P1_1 B@2", "A #P1_1 #P2_1 B@3", "A #P1_1@4", "A #P1_1 #P3_1@3",
        "A #P1_1 #P3_1 C@2", "A C@1")),
}


def golden_system(trace_id: str) -> PSystemDef:
    """The compiled one-production system with the chain's first word as the
    only axiom of the skin."""
    g, theorem, chain = GOLDEN[trace_id]
    sys = compile_t1(g) if theorem == 1 else compile_t2(g)
    w0, r0 = chain[0]
    return sys.with_axioms({r0: {w0}})


def replay_golden(trace_id: str, system: Optional[PSystemDef] = None) -> Trace:
    """Drive the chain through single rule applications of the compiled
    system; return the replayed trace or raise :class:`ChainDiverged`."""
    _, _, chain = GOLDEN[trace_id]
    sys = system if system is not None else golden_system(trace_id)
    steps = []
    for i, ((w, r), (w2, r2)) in enumerate(zip(chain, chain[1:]), 1):
        for rule in sys.rules.get(r, ()):
            if r2 in resolve_target(sys.tree, r, rule.target) and w2 in apply_rule(w, rule):
                steps.append(TraceStep(r, w, rule, w2, r2))
                break
        else:
            raise ChainDiverged(trace_id, i, (w2, r2), (w, r))
    return Trace(tuple(steps))


# ------------------------------------------------------------ dead ends

def diagnose_blocked(sys: PSystemDef, bounds: Bounds) -> set[tuple[int, Word]]:
    """Reachable (region, word) pairs to which no rule of the region applies."""
    res = run(sys, bounds)
    comp = res._comp
    dec = comp.codec.decode
    out = set()
    for r in comp.regions:
        rules = comp.rules[r]
        for w in res._contents[r]:
            if not any(erule.apply(w) for erule, _ in rules):
                out.add((r, dec(w)))
    return out
