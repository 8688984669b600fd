"""One-step insertion/deletion relations and InsDel closure enumeration.

:func:`apply_insertion` and :func:`apply_deletion` work on symbol tuples by
scanning every decomposition of the word.  The enumeration routines use an
encoded representation instead: each symbol is mapped to a single character
and words become ``str``, so occurrence search is ``str.find``.  The two
routes are checked against each other in the test-suite.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import ContextRule, Kind, Word


@dataclass(frozen=True)
class Bounds:
    """Truncation limits for an enumeration.

    ``max_output_len`` (L) filters the reported language,
    ``max_intermediate_len`` (B) prunes any word longer than it,
    ``max_steps`` (S) limits the number of derivation rounds and
    ``max_strings`` caps the number of distinct words kept.
    """

    max_output_len: int
    max_intermediate_len: int
    max_steps: int
    max_strings: Optional[int] = None

    def __post_init__(self):
        if self.max_output_len < 0 or self.max_steps < 0:
            raise ValueError("bounds must be non-negative")
        if self.max_intermediate_len < self.max_output_len:
            raise ValueError("max_intermediate_len must be >= max_output_len")

    def __str__(self) -> str:
        cap = "" if self.max_strings is None else f",cap={self.max_strings}"
        return (f"L={self.max_output_len},B={self.max_intermediate_len},"
                f"S={self.max_steps}{cap}")


def apply_insertion(x: Word, rule: ContextRule) -> set[Word]:
    if rule.kind is not Kind.INS:
        raise ValueError("apply_insertion needs an insertion rule")
    u, a, v = rule.left, rule.body, rule.right
    x = tuple(x)
    out = set()
    for i in range(len(u), len(x) - len(v) + 1):
        if x[i - len(u):i] == u and x[i:i + len(v)] == v:
            out.add(x[:i] + a + x[i:])
    return out


def apply_deletion(x: Word, rule: ContextRule) -> set[Word]:
    if rule.kind is not Kind.DEL:
        raise ValueError("apply_deletion needs a deletion rule")
    u, a, v = rule.left, rule.body, rule.right
    x = tuple(x)
    out = set()
    for i in range(len(u), len(x) - len(a) - len(v) + 1):
        j = i + len(a)
        if x[i:j] == a and x[i - len(u):i] == u and x[j:j + len(v)] == v:
            out.add(x[:i] + x[j:])
    return out


def apply_rule(x: Word, rule: ContextRule) -> set[Word]:
    return apply_insertion(x, rule) if rule.kind is Kind.INS else apply_deletion(x, rule)


# ------------------------------------------------------------ encoded words

class Codec:
    """Bijection between symbol names and single characters."""

    _BASE = 0x100

    def __init__(self, symbols: Iterable[str] = ()):
        self._to_char: dict[str, str] = {}
        self._to_sym: dict[str, str] = {}
        for s in sorted(set(symbols)):
            self.char(s)

    def char(self, symbol: str) -> str:
        c = self._to_char.get(symbol)
        if c is None:
            c = chr(self._BASE + len(self._to_char))
            self._to_char[symbol] = c
            self._to_sym[c] = symbol
        return c

    def encode(self, w: Iterable[str]) -> str:
        return "".join(self.char(s) for s in w)

    def decode(self, s: str) -> Word:
        return tuple(self._to_sym[c] for c in s)


class EncodedRule:
    """A context rule over encoded words with a precomputed search pattern."""

    __slots__ = ("rule", "is_ins", "pattern", "offset", "body", "cut")

    def __init__(self, rule: ContextRule, codec: Codec):
        self.rule = rule
        self.is_ins = rule.kind is Kind.INS
        u, a, v = (codec.encode(p) for p in (rule.left, rule.body, rule.right))
        self.body = a
        self.offset = len(u)
        if self.is_ins:
            self.pattern = u + v
            self.cut = len(u)
        else:
            self.pattern = u + a + v
            self.cut = len(u) + len(a)

    def apply(self, x: str) -> set[str]:
        pat = self.pattern
        out = set()
        if not pat:  # context-free insertion
            a = self.body
            for i in range(len(x) + 1):
                out.add(x[:i] + a + x[i:])
            return out
        i = x.find(pat)
        if self.is_ins:
            a, k = self.body, self.offset
            while i >= 0:
                out.add(x[:i + k] + a + x[i + k:])
                i = x.find(pat, i + 1)
        else:
            k, c = self.offset, self.cut
            while i >= 0:
                out.add(x[:i + k] + x[i + c:])
                i = x.find(pat, i + 1)
        return out


# ------------------------------------------------------------ InsDel systems

@dataclass(frozen=True)
class InsDelSystem:
    alphabet: frozenset[str]
    terminals: frozenset[str]
    axioms: frozenset[Word]
    insertions: tuple[ContextRule, ...]
    deletions: tuple[ContextRule, ...]

    def __post_init__(self):
        if not self.terminals <= self.alphabet:
            raise ValueError("terminals must be a subset of the alphabet")
        if any(r.kind is not Kind.INS for r in self.insertions) or \
                any(r.kind is not Kind.DEL for r in self.deletions):
            raise ValueError("rule kind does not match its set")
        used = set().union(*self.axioms) if self.axioms else set()
        for r in self.insertions + self.deletions:
            used |= r.symbols
        if not used <= self.alphabet:
            raise ValueError(f"symbols outside the alphabet: {sorted(used - self.alphabet)}")


@dataclass(frozen=True)
class ClosureResult:
    language: frozenset[Word]
    exhausted: bool
    steps: int
    explored: int


def derive_closure(sys: InsDelSystem, bounds: Bounds) -> ClosureResult:
    """Breadth-first closure of the one-step relation from the axioms.

    When ``exhausted`` is false the language is only a lower bound of the
    true slice: some derivation was cut by a bound.
    """
    codec = Codec(sys.alphabet)
    rules = [EncodedRule(r, codec) for r in sys.insertions + sys.deletions]
    B = bounds.max_intermediate_len
    cap = bounds.max_strings
    pruned = capped = fixpoint = False

    seen: set[str] = set()
    for w in sys.axioms:
        if len(w) > B:
            pruned = True
        else:
            seen.add(codec.encode(w))
    frontier = set(seen)
    steps = 0
    while steps < bounds.max_steps:
        new: set[str] = set()
        for x in frontier:
            for r in rules:
                for y in r.apply(x):
                    if len(y) > B:
                        pruned = True
                    elif y not in seen and y not in new:
                        new.add(y)
        steps += 1
        if not new:
            fixpoint = True
            break
        if cap is not None and len(seen) + len(new) > cap:
            new = set(sorted(new)[:max(cap - len(seen), 0)])
            capped = True
        seen |= new
        frontier = new
        if capped:
            break

    exhausted = fixpoint and not pruned and not capped
    if not exhausted:
        warnings.warn(f"closure truncated at {bounds}; result is a lower bound",
                      TruncationWarning, stacklevel=2)
    term = {codec.char(t) for t in sys.terminals}
    L = bounds.max_output_len
    lang = frozenset(codec.decode(w) for w in seen
                     if len(w) <= L and all(c in term for c in w))
    return ClosureResult(lang, exhausted, steps, len(seen))


class TruncationWarning(UserWarning):
    """An enumeration stopped before reaching a fixpoint."""
