"""Brute-force enumeration of grammar language slices.

Deliberately shares no rewriting code with the engine: sentential forms
are tuples and every occurrence of every left-hand side is replaced by
direct slicing.  This is the ground truth for the compiled systems.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .core import Grammar, Production, Word
from .engine import Bounds


def default_bounds(max_len: int, max_steps: int = 100,
                   max_strings: Optional[int] = None) -> Bounds:
    return Bounds(max_len, 2 * max_len + 4, max_steps, max_strings)


@dataclass(frozen=True)
class OracleResult:
    language: frozenset[Word]
    exhausted: bool
    parents: dict = field(repr=False, compare=False, default_factory=dict)

    def derivation(self, w: Word) -> list[tuple[Word, Optional[Production]]]:
        """Sentential forms from the start symbol to ``w``, each paired with
        the production that produced it (``None`` for the start)."""
        w = tuple(w)
        if w not in self.parents:
            raise KeyError(w)
        chain = []
        while w is not None:
            prev, prod = self.parents[w]
            chain.append((w, prod))
            w = prev
        return chain[::-1]


def rewrite_once(form: Word, prod: Production) -> list[Word]:
    lhs, rhs, k = prod.lhs, prod.rhs, len(prod.lhs)
    return [form[:i] + rhs + form[i + k:]
            for i in range(len(form) - k + 1) if form[i:i + k] == lhs]


def derive_bfs(g: Grammar, bounds: Bounds) -> OracleResult:
    B = bounds.max_intermediate_len
    start = (g.start,)
    parents: dict[Word, tuple[Optional[Word], Optional[Production]]] = {start: (None, None)}
    frontier = [start]
    pruned = capped = fixpoint = False
    for _ in range(bounds.max_steps):
        nxt = []
        for form in frontier:
            for prod in g.productions:
                for new in rewrite_once(form, prod):
                    if len(new) > B:
                        pruned = True
                    elif new not in parents:
                        parents[new] = (form, prod)
                        nxt.append(new)
        if not nxt:
            fixpoint = True
            break
        if bounds.max_strings is not None and len(parents) > bounds.max_strings:
            capped = True
            break
        frontier = nxt
    L = bounds.max_output_len
    lang = frozenset(f for f in parents
                     if len(f) <= L and all(s in g.terminals for s in f))
    return OracleResult(lang, fixpoint and not pruned and not capped, parents)


class Membership(Enum):
    YES = "yes"
    NO_WITHIN_BOUNDS = "no_within_bounds"


def membership(g: Grammar, w: Word, bounds: Bounds) -> Membership:
    w = tuple(w)
    if not all(s in g.terminals for s in w):
        raise ValueError("membership is only defined for terminal words")
    if len(w) > bounds.max_output_len:
        bounds = Bounds(len(w), max(bounds.max_intermediate_len, len(w)),
                        bounds.max_steps, bounds.max_strings)
    if w in derive_bfs(g, bounds).language:
        return Membership.YES
    return Membership.NO_WITHIN_BOUNDS
