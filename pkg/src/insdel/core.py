"""Words, context rules, Penttonen grammars and size measures.

Symbols are plain strings (opaque named tokens) and words are tuples of
symbols, so ``()`` is the empty word.  Names starting with ``#`` are
reserved for symbols generated by the compilers.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Union

Symbol = str
Word = tuple[str, ...]

EPS: Word = ()
RESERVED_PREFIX = "#"


def word(text: str) -> Word:
    """Parse a space-separated word; ``eps`` (or blank) is the empty word."""
    parts = text.split()
    if parts == ["eps"]:
        return EPS
    if "eps" in parts:
        raise ValueError(f"'eps' must stand alone in a word: {text!r}")
    return tuple(parts)


def show(w: Iterable[str]) -> str:
    w = tuple(w)
    return " ".join(w) if w else "eps"


def is_symbol_name(name: str) -> bool:
    # '|' and '->' would be ambiguous in the text formats
    return (bool(name) and name.isprintable() and not any(c.isspace() for c in name)
            and "|" not in name and "->" not in name and name != "eps")


class Kind(Enum):
    INS = "ins"
    DEL = "del"


class Target(Enum):
    HERE = "here"
    IN = "in"
    OUT = "out"


@dataclass(frozen=True)
class ContextRule:
    """Insertion or deletion rule ``(left, body, right)`` with a target."""

    kind: Kind
    left: Word
    body: Word
    right: Word
    target: Target = Target.HERE

    def __post_init__(self):
        if not self.body:
            raise ValueError("rule body must be non-empty")

    @property
    def symbols(self) -> set[str]:
        return set(self.left) | set(self.body) | set(self.right)

    def __str__(self) -> str:
        tag = "a" if self.kind is Kind.INS else "e"
        return (f"({show(self.left)}, {show(self.body)}, {show(self.right)}; "
                f"{self.target.value})_{tag}")


def _as_word(x: Union[str, Word]) -> Word:
    return word(x) if isinstance(x, str) else tuple(x)


def ins(left, body, right, target: Union[Target, str] = Target.HERE) -> ContextRule:
    """Shorthand: ``ins("A", "#P1_1", "", "in")``; strings are parsed with :func:`word`."""
    return ContextRule(Kind.INS, _as_word(left), _as_word(body), _as_word(right),
                       Target(target))


def dele(left, body, right, target: Union[Target, str] = Target.HERE) -> ContextRule:
    return ContextRule(Kind.DEL, _as_word(left), _as_word(body), _as_word(right),
                       Target(target))


# ---------------------------------------------------------------- grammars

@dataclass(frozen=True)
class Production:
    index: int
    lhs: Word
    rhs: Word

    def __str__(self) -> str:
        return f"{show(self.lhs)} -> {show(self.rhs)}"


@dataclass(frozen=True)
class Grammar:
    nonterminals: frozenset[str]
    terminals: frozenset[str]
    start: str
    productions: tuple[Production, ...]

    @classmethod
    def build(cls, nonterminals: Iterable[str], terminals: Iterable[str], start: str,
              productions: Iterable[tuple[str, str]]) -> "Grammar":
        """Convenience constructor; productions are ``("A B", "A C")`` pairs
        numbered from 1 in the given order."""
        prods = tuple(Production(i, word(l), word(r))
                      for i, (l, r) in enumerate(productions, 1))
        return cls(frozenset(nonterminals), frozenset(terminals), start, prods)

    @property
    def symbols(self) -> frozenset[str]:
        return self.nonterminals | self.terminals


# Penttonen production classes

@dataclass(frozen=True)
class ABtoAC:
    a: str
    b: str
    c: str


@dataclass(frozen=True)
class AtoBC:
    a: str
    b: str
    c: str


@dataclass(frozen=True)
class AtoAlpha:
    a: str
    alpha: str


@dataclass(frozen=True)
class AtoEps:
    a: str


PenttonenClass = Union[ABtoAC, AtoBC, AtoAlpha, AtoEps]


class NotPenttonen(ValueError):
    def __init__(self, production: Production, reason: str):
        super().__init__(f"production {production.index} ({production}): {reason}")
        self.production = production
        self.reason = reason


def classify_production(prod: Production, grammar: Grammar) -> PenttonenClass:
    N = grammar.nonterminals
    lhs, rhs = prod.lhs, prod.rhs
    if not all(s in N for s in lhs):
        raise NotPenttonen(prod, "left-hand side must consist of nonterminals")
    if len(lhs) == 2:
        if len(rhs) == 2 and rhs[0] == lhs[0] and rhs[1] in N:
            return ABtoAC(lhs[0], lhs[1], rhs[1])
        raise NotPenttonen(prod, "two-symbol left side must have the form AB -> AC")
    if len(lhs) != 1:
        raise NotPenttonen(prod, f"left-hand side of length {len(lhs)}")
    a = lhs[0]
    if len(rhs) == 2:
        if rhs[0] in N and rhs[1] in N:
            return AtoBC(a, rhs[0], rhs[1])
        raise NotPenttonen(prod, "A -> BC requires nonterminals B and C")
    if len(rhs) == 1:
        if rhs[0] not in grammar.symbols:
            raise NotPenttonen(prod, f"unknown symbol {rhs[0]!r}")
        return AtoAlpha(a, rhs[0])
    if not rhs:
        return AtoEps(a)
    raise NotPenttonen(prod, f"right-hand side of length {len(rhs)}")


class Violation(NamedTuple):
    kind: str
    index: int  # production index, 0 for grammar-level problems
    message: str

    def __str__(self) -> str:
        where = f"@{self.index}" if self.index else ""
        return f"{self.kind}{where}: {self.message}"


def validate_penttonen(grammar: Grammar) -> list[Violation]:
    """All problems preventing compilation of ``grammar``; empty when valid."""
    out: list[Violation] = []
    N, T = grammar.nonterminals, grammar.terminals
    for s in sorted(N | T):
        if not is_symbol_name(s):
            out.append(Violation("BadSymbol", 0, f"invalid symbol name {s!r}"))
        elif s.startswith(RESERVED_PREFIX):
            out.append(Violation("ReservedSymbol", 0, f"{s!r} uses the reserved '#' prefix"))
    if N & T:
        out.append(Violation("AlphabetOverlap", 0,
                             f"symbols both terminal and nonterminal: {sorted(N & T)}"))
    if grammar.start not in N:
        out.append(Violation("StartNotNonterminal", 0,
                             f"start symbol {grammar.start!r} is not a nonterminal"))
    indices = [p.index for p in grammar.productions]
    if indices != list(range(1, len(indices) + 1)):
        out.append(Violation("BadIndexing", 0, "productions must be numbered 1..n in order"))
    for p in grammar.productions:
        unknown = [s for s in p.lhs + p.rhs if s not in N | T]
        if unknown:
            out.append(Violation("UnknownSymbol", p.index, f"{p}: {unknown}"))
            continue
        try:
            classify_production(p, grammar)
        except NotPenttonen as e:
            out.append(Violation("NotPenttonen", p.index, e.reason))
    return out


# ---------------------------------------------------------------- size

class SizeVector(NamedTuple):
    n: int = 0
    m: int = 0
    m_prime: int = 0
    p: int = 0
    q: int = 0
    q_prime: int = 0

    def __str__(self) -> str:
        return "({},{},{};{},{},{})".format(*self)

    def dominated_by(self, other: "SizeVector") -> bool:
        return all(a <= b for a, b in zip(self, other))


def size_of_rules(insertions: Iterable[ContextRule],
                  deletions: Iterable[ContextRule]) -> SizeVector:
    insertions, deletions = list(insertions), list(deletions)
    if any(r.kind is not Kind.INS for r in insertions) or \
            any(r.kind is not Kind.DEL for r in deletions):
        raise ValueError("rule kind does not match its set")

    def mx(rules, part):
        return max((len(getattr(r, part)) for r in rules), default=0)

    return SizeVector(mx(insertions, "body"), mx(insertions, "left"), mx(insertions, "right"),
                      mx(deletions, "body"), mx(deletions, "left"), mx(deletions, "right"))


def size_of(rules: Iterable[ContextRule]) -> SizeVector:
    rules = list(rules)
    return size_of_rules([r for r in rules if r.kind is Kind.INS],
                         [r for r in rules if r.kind is Kind.DEL])


def total_weight(sv: SizeVector) -> int:
    return sum(sv)


def check_minimality(sv: SizeVector) -> bool:
    return sv.n + sv.m + sv.m_prime >= 2 and sv.p + sv.q + sv.q_prime >= 2
