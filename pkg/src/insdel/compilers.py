"""Grammar to P system compilers for the two five-membrane constructions.

Both take a grammar in Penttonen normal form (productions AB -> AC,
A -> BC, A -> x with x a single symbol, A -> eps) and produce a system
with linear membrane structure [1[2[3[4[5]]]]], axiom ``S #X`` in the skin
and, for production number i, a bundle of rules threaded by the marker
symbols ``#Pj_i``.  The sentinel ``#X`` is deleted by an out-rule of the
skin, which is how terminal strings leave the system.

``compile_t1`` uses insertions of one symbol in a one-symbol left
context and context-free deletions of up to two symbols, size
(1,1,0;2,0,0).  ``compile_t2`` uses context-free insertions of two
symbols and deletions of one symbol in a one-symbol left context, size
(2,0,0;1,1,0).
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (EPS, ABtoAC, AtoAlpha, AtoBC, AtoEps, ContextRule, Grammar,
                   NotPenttonen, SizeVector, classify_production, dele, ins, size_of,
                   validate_penttonen)
from .membrane import MembraneTree, PSystemDef

T1_SIZE = SizeVector(1, 1, 0, 2, 0, 0)
T2_SIZE = SizeVector(2, 0, 0, 1, 1, 0)
MEMBRANES = 5


@dataclass(frozen=True)
class MarkerSet:
    """Fresh control symbols: ``#Pj_i`` for production i, and the sentinel."""

    productions: int
    sentinel: str = "#X"

    def __call__(self, i: int, j: int) -> str:
        if not (1 <= i <= self.productions and 1 <= j <= 5):
            raise IndexError((i, j))
        return f"#P{j}_{i}"

    def all(self) -> set[str]:
        return {self(i, j) for i in range(1, self.productions + 1) for j in range(1, 6)} \
            | {self.sentinel}


def _check(g: Grammar) -> None:
    problems = validate_penttonen(g)
    if problems:
        p = problems[0]
        prod = next((q for q in g.productions if q.index == p.index), None)
        if prod is not None:
            raise NotPenttonen(prod, p.message)
        raise ValueError("; ".join(str(v) for v in problems))


def _t1_bundle(cls, P) -> dict[int, list[ContextRule]]:
    p1, p2, p3 = P(1), P(2), P(3)
    if isinstance(cls, ABtoAC):
        a, b, c = cls.a, cls.b, cls.c
        return {1: [ins(a, p1, EPS, "in")],
                2: [ins(p1, p2, EPS, "in"), dele(EPS, (p1, p3), EPS, "out")],
                3: [dele(EPS, (p2, b), EPS, "in"), ins(p3, c, EPS, "out")],
                4: [ins(p1, p3, EPS, "out")]}
    if isinstance(cls, AtoBC):
        a, b, c = cls.a, cls.b, cls.c
        return {1: [ins(a, p1, EPS, "in")],
                2: [ins(p1, p2, EPS, "in"), dele(EPS, p2, EPS, "out")],
                3: [ins(p1, b, EPS, "in"), dele(EPS, p3, EPS, "out")],
                4: [dele(EPS, (a, p1), EPS, "in"), ins(p3, c, EPS, "out")],
                5: [ins(p2, p3, EPS, "out")]}
    if isinstance(cls, AtoAlpha):
        a, x = cls.a, cls.alpha
        return {1: [ins(a, p1, EPS, "in")],
                2: [ins(p1, x, EPS, "in"), dele(EPS, (p2, p3), EPS, "out")],
                3: [ins(p1, p2, EPS, "in"), ins(p2, p3, EPS, "out")],
                4: [dele(EPS, (a, p1), EPS, "out")]}
    return {1: [dele(EPS, cls.a, EPS, "here")]}


def _t2_bundle(cls, P) -> dict[int, list[ContextRule]]:
    p1, p2, p3, p4 = P(1), P(2), P(3), P(4)
    if isinstance(cls, ABtoAC):
        a, b, c = cls.a, cls.b, cls.c
        return {1: [ins(EPS, (p1, p2), EPS, "in")],
                2: [dele(p2, b, EPS, "in"), dele(a, p3, EPS, "out")],
                3: [ins(EPS, (p3, c), EPS, "in"), dele(a, p2, EPS, "out")],
                4: [dele(a, p1, EPS, "out")]}
    if isinstance(cls, AtoBC):
        a, b, c = cls.a, cls.b, cls.c
        return {1: [ins(EPS, (p1, p2), EPS, "in")],
                2: [dele(p2, a, EPS, "in"), dele(EPS, p3, EPS, "out")],
                3: [ins(EPS, (b, p3), EPS, "in"), dele(p3, p2, EPS, "out")],
                4: [dele(p3, p1, EPS, "in"), dele(p2, p4, EPS, "out")],
                5: [ins(EPS, (p4, c), EPS, "out")]}
    if isinstance(cls, AtoAlpha):
        a, x = cls.a, cls.alpha
        return {1: [ins(EPS, (x, p3), EPS, "in")],
                2: [dele(p3, a, EPS, "in"), dele(x, p2, EPS, "out")],
                3: [ins(EPS, (p1, p2), EPS, "in"), dele(x, p1, EPS, "out")],
                4: [dele(x, p3, EPS, "out")]}
    return {1: [dele(EPS, cls.a, EPS, "here")]}


def _compile(g: Grammar, bundle) -> PSystemDef:
    _check(g)
    markers = MarkerSet(len(g.productions))
    rules: dict[int, list[ContextRule]] = {r: [] for r in range(1, MEMBRANES + 1)}
    for prod in g.productions:
        cls = classify_production(prod, g)
        for region, rs in bundle(cls, lambda j: markers(prod.index, j)).items():
            for r in rs:
                if r not in rules[region]:
                    rules[region].append(r)
    rules[1].append(dele(EPS, markers.sentinel, EPS, "out"))
    alphabet = set(g.symbols) | {markers.sentinel}
    for rs in rules.values():
        for r in rs:
            alphabet |= r.symbols
    return PSystemDef(
        alphabet=frozenset(alphabet),
        terminals=g.terminals,
        tree=MembraneTree.linear(MEMBRANES),
        axioms={1: frozenset({(g.start, markers.sentinel)})},
        rules={r: tuple(rs) for r, rs in rules.items()},
    )


def compile_t1(g: Grammar) -> PSystemDef:
    """Five-membrane system of size (1,1,0;2,0,0) generating L(g)."""
    return _compile(g, _t1_bundle)


def compile_t2(g: Grammar) -> PSystemDef:
    """Five-membrane system of size (2,0,0;1,1,0).

    Not sound in general: the context-free insertions of membrane 3 can
    act on a word that is simulating another production, so the system
    may generate words outside L(g).  tests/test_findings.py pins down a
    counterexample.
    """
    return _compile(g, _t2_bundle)


def compile_theorem(g: Grammar, theorem: int) -> PSystemDef:
    if theorem == 1:
        return compile_t1(g)
    if theorem == 2:
        return compile_t2(g)
    raise ValueError(f"unknown construction {theorem!r}; expected 1 or 2")


def system_size(sys: PSystemDef) -> SizeVector:
    return size_of(sys.all_rules())


def assert_size(sys: PSystemDef, expected: SizeVector) -> bool:
    return system_size(sys).dominated_by(expected)


def expected_rule_count(g: Grammar) -> int:
    per_class = {ABtoAC: 6, AtoBC: 8, AtoAlpha: 6, AtoEps: 1}
    return 1 + sum(per_class[type(classify_production(p, g))] for p in g.productions)
