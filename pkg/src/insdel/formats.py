"""Text formats for grammars, P systems and word listings.

Words are always written as space-separated symbol names, ``eps`` for the
empty word.  Printing is canonical (sorted alphabets, rules in region
order), so ``format_x(parse_x(text)) == text`` for canonical documents.

Grammar file::

    nonterminals: S A B
    terminals: a b
    start: S
    S -> A B
    A B -> A C
    A -> eps

System file::

    alphabet: #P1_1 #X A B S a
    terminals: a
    membranes: [1[2[3[4[5]]]]]
    axiom 1: S #X
    rule 1: ins (A | #P1_1 | eps) -> in
    rule 1: del (eps | #X | eps) -> out
"""
from __future__ import annotations

import re
from typing import Iterable, Optional

from .core import (ContextRule, Grammar, Kind, Production, Target, Word, is_symbol_name,
                   show, word)
from .membrane import MembraneTree, PSystemDef


class FormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def _symbols(text: str, line: int) -> list[str]:
    names = text.split()
    for n in names:
        if not is_symbol_name(n):
            raise FormatError(f"invalid symbol name {n!r}", line)
    return names


def _word(text: str, line: int) -> Word:
    try:
        w = word(text)
    except ValueError as e:
        raise FormatError(str(e), line) from None
    for n in w:
        if not is_symbol_name(n):
            raise FormatError(f"invalid symbol name {n!r}", line)
    return w


def sort_words(words: Iterable[Word]) -> list[Word]:
    return sorted(words)


# ---------------------------------------------------------------- grammars

_COMMENT = re.compile(r"(^|\s)#.*$")
_HEADERS = ("nonterminals", "terminals", "start")


def parse_grammar_lines(text: str) -> tuple[Grammar, dict[int, int]]:
    """Parse a grammar file; also return production index -> line number."""
    headers: dict[str, str] = {}
    prods: list[Production] = []
    lines: dict[int, int] = {}
    for no, raw in enumerate(text.splitlines(), 1):
        line = _COMMENT.sub("", raw).strip()
        if not line:
            continue
        if "->" in line:
            lhs, _, rhs = line.partition("->")
            if "->" in rhs:
                raise FormatError("more than one '->'", no)
            lhs_w, rhs_w = _word(lhs, no), _word(rhs, no)
            if not lhs_w:
                raise FormatError("empty left-hand side", no)
            idx = len(prods) + 1
            prods.append(Production(idx, lhs_w, rhs_w))
            lines[idx] = no
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in _HEADERS:
            raise FormatError(f"unrecognised line {raw.strip()!r}", no)
        if key in headers:
            raise FormatError(f"duplicate '{key}:' header", no)
        headers[key] = rest
        _symbols(rest, no)
    for key in _HEADERS:
        if key not in headers:
            raise FormatError(f"missing '{key}:' header")
    start = headers["start"].split()
    if len(start) != 1:
        raise FormatError("'start:' needs exactly one symbol")
    g = Grammar(frozenset(headers["nonterminals"].split()),
                frozenset(headers["terminals"].split()), start[0], tuple(prods))
    return g, lines


def parse_grammar(text: str) -> Grammar:
    return parse_grammar_lines(text)[0]


def format_grammar(g: Grammar) -> str:
    out = [f"nonterminals: {' '.join(sorted(g.nonterminals))}".rstrip(),
           f"terminals: {' '.join(sorted(g.terminals))}".rstrip(),
           f"start: {g.start}"]
    out += [str(p) for p in g.productions]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- systems

_RULE = re.compile(r"^rule\s+(\d+)\s*:\s*(ins|del)\s*\((.*)\|(.*)\|(.*)\)\s*->\s*(\w+)$")
_AXIOM = re.compile(r"^axiom\s+(\d+)\s*:(.*)$")


def format_rule(rule: ContextRule) -> str:
    return (f"{rule.kind.value} ({show(rule.left)} | {show(rule.body)} | {show(rule.right)})"
            f" -> {rule.target.value}")


def parse_system(text: str) -> PSystemDef:
    headers: dict[str, str] = {}
    axioms: dict[int, set[Word]] = {}
    rules: dict[int, list[ContextRule]] = {}
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _RULE.match(line)
        if m:
            region, kind, u, a, v, tar = m.groups()
            try:
                rule = ContextRule(Kind(kind), _word(u, no), _word(a, no), _word(v, no),
                                   Target(tar))
            except ValueError as e:
                raise FormatError(str(e), no) from None
            rules.setdefault(int(region), []).append(rule)
            continue
        m = _AXIOM.match(line)
        if m:
            axioms.setdefault(int(m.group(1)), set()).add(_word(m.group(2), no))
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("alphabet", "terminals", "membranes"):
            raise FormatError(f"unrecognised line {line!r}", no)
        if key in headers:
            raise FormatError(f"duplicate '{key}:' header", no)
        if key != "membranes":
            _symbols(rest, no)
        headers[key] = rest.strip()
    for key in ("alphabet", "terminals", "membranes"):
        if key not in headers:
            raise FormatError(f"missing '{key}:' header")
    try:
        tree = MembraneTree.parse(headers["membranes"])
    except ValueError as e:
        raise FormatError(f"membranes: {e}") from None
    sys = PSystemDef(frozenset(headers["alphabet"].split()),
                     frozenset(headers["terminals"].split()), tree,
                     {r: frozenset(ws) for r, ws in axioms.items()},
                     {r: tuple(rs) for r, rs in rules.items()})
    problems = sys.problems()
    if problems:
        raise FormatError("; ".join(problems))
    return sys


def format_system(sys: PSystemDef) -> str:
    out = [f"alphabet: {' '.join(sorted(sys.alphabet))}".rstrip(),
           f"terminals: {' '.join(sorted(sys.terminals))}".rstrip(),
           f"membranes: {sys.tree}"]
    for r in sys.tree.regions:
        for w in sort_words(sys.axioms.get(r, ())):
            out.append(f"axiom {r}: {show(w)}")
    for r in sys.tree.regions:
        for rule in sys.rules.get(r, ()):
            out.append(f"rule {r}: {format_rule(rule)}")
    return "\n".join(out) + "\n"


def format_listing(words: Iterable[Word], exhausted: bool) -> str:
    lines = [show(w) for w in sort_words(words)]
    lines.append(f"exhausted: {'true' if exhausted else 'false'}")
    return "\n".join(lines) + "\n"
