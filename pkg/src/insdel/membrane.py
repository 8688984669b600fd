"""Insertion-deletion P systems under the arbitrary-copies semantics.

Every string present in a region is available in unboundedly many copies,
and applying a rule never consumes the original.  A configuration is
therefore a family of sets that only grows, and one maximally parallel
step is "apply every rule of every region to every string, and add the
results to their target regions".  :func:`step` implements that literally;
:func:`run` computes the same sequence of configurations but only rewrites
the strings that appeared in the previous step (results of older strings
are already present).
"""
from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Optional, Union

from .core import ContextRule, Target, Word, show, word
from .engine import Bounds, Codec, EncodedRule, apply_rule

OUT = 0  # destination "outside the skin"; region ids start at 1


class InTargetAtLeaf(ValueError):
    pass


class NotGenerated(LookupError):
    pass


@dataclass(frozen=True)
class MembraneTree:
    """Membrane structure as a parent map; region 1 is the skin."""

    parent: Mapping[int, Optional[int]]

    def __post_init__(self):
        ids = sorted(self.parent)
        if ids != list(range(1, len(ids) + 1)):
            raise ValueError("regions must be numbered 1..k")
        if self.parent.get(1, 0) is not None:
            raise ValueError("region 1 must be the skin (no parent)")
        for r in ids[1:]:
            seen = {r}
            p = self.parent[r]
            while p is not None:
                if p not in self.parent or p in seen:
                    raise ValueError(f"region {r} is not reachable from the skin")
                seen.add(p)
                p = self.parent[p]

    @property
    def regions(self) -> list[int]:
        return sorted(self.parent)

    @cached_property
    def children(self) -> dict[int, list[int]]:
        ch: dict[int, list[int]] = {r: [] for r in self.parent}
        for r, p in sorted(self.parent.items()):
            if p is not None:
                ch[p].append(r)
        return ch

    @classmethod
    def linear(cls, k: int) -> "MembraneTree":
        return cls({i: (i - 1 if i > 1 else None) for i in range(1, k + 1)})

    @classmethod
    def parse(cls, text: str) -> "MembraneTree":
        """Parse a bracket word such as ``[1[2][3[4]]]``."""
        tokens = re.findall(r"\[\d+|\]|\S", text.replace(" ", ""))
        parent: dict[int, Optional[int]] = {}
        stack: list[int] = []
        for i, tok in enumerate(tokens):
            if tok.startswith("[") and len(tok) > 1:
                r = int(tok[1:])
                if r in parent:
                    raise ValueError(f"duplicate region {r}")
                if not stack and parent:
                    raise ValueError("more than one outermost membrane")
                parent[r] = stack[-1] if stack else None
                stack.append(r)
            elif tok == "]" and stack:
                stack.pop()
            else:
                raise ValueError(f"malformed membrane structure near token {i}: {tok!r}")
        if stack or not parent:
            raise ValueError("unbalanced membrane structure")
        return cls(parent)

    def __str__(self) -> str:
        def render(r: int) -> str:
            return f"[{r}" + "".join(render(c) for c in self.children[r]) + "]"
        return render(1)


def resolve_target(tree: MembraneTree, region: int, tar: Target) -> tuple[int, ...]:
    if region not in tree.parent:
        raise KeyError(region)
    if tar is Target.HERE:
        return (region,)
    if tar is Target.OUT:
        p = tree.parent[region]
        return (OUT,) if p is None else (p,)
    kids = tree.children[region]
    if not kids:
        raise InTargetAtLeaf(f"region {region} has no inner membrane")
    return tuple(kids)


@dataclass(frozen=True)
class PSystemDef:
    alphabet: frozenset[str]
    terminals: frozenset[str]
    tree: MembraneTree
    axioms: Mapping[int, frozenset[Word]]
    rules: Mapping[int, tuple[ContextRule, ...]]

    def problems(self) -> list[str]:
        out = []
        if not self.terminals <= self.alphabet:
            out.append("terminals are not a subset of the alphabet")
        regions = set(self.tree.regions)
        for r in set(self.axioms) | set(self.rules):
            if r not in regions:
                out.append(f"region {r} is not in the membrane structure")
        for r, words in self.axioms.items():
            for w in words:
                if not set(w) <= self.alphabet:
                    out.append(f"axiom {show(w)} in region {r} uses unknown symbols")
        for r, rules in self.rules.items():
            for rule in rules:
                if not rule.symbols <= self.alphabet:
                    out.append(f"rule {rule} in region {r} uses unknown symbols")
                if rule.target is Target.IN and r in regions and not self.tree.children[r]:
                    out.append(f"rule {rule} targets 'in' from leaf region {r}")
        return out

    def all_rules(self) -> list[ContextRule]:
        return [rule for r in self.tree.regions for rule in self.rules.get(r, ())]

    def with_axioms(self, axioms: Mapping[int, Iterable[Word]]) -> "PSystemDef":
        return PSystemDef(self.alphabet, self.terminals, self.tree,
                          {r: frozenset(ws) for r, ws in axioms.items()}, self.rules)

    def with_rules(self, rules: Mapping[int, Iterable[ContextRule]]) -> "PSystemDef":
        return PSystemDef(self.alphabet, self.terminals, self.tree, self.axioms,
                          {r: tuple(rs) for r, rs in rules.items()})


@dataclass(frozen=True)
class Configuration:
    contents: Mapping[int, frozenset[Word]]
    emitted: frozenset[Word] = frozenset()
    step_count: int = 0

    @classmethod
    def initial(cls, sys: PSystemDef) -> "Configuration":
        return cls({r: frozenset(sys.axioms.get(r, ())) for r in sys.tree.regions})


def step(sys: PSystemDef, cfg: Configuration, bounds: Bounds) -> Configuration:
    """One maximally parallel step, computed from scratch over all strings."""
    B = bounds.max_intermediate_len
    contents = {r: set(ws) for r, ws in cfg.contents.items()}
    emitted = set(cfg.emitted)
    for r in sys.tree.regions:
        for rule in sys.rules.get(r, ()):
            dests = resolve_target(sys.tree, r, rule.target)
            for w in cfg.contents[r]:
                for w2 in apply_rule(w, rule):
                    if len(w2) > B:
                        continue
                    for d in dests:
                        (emitted if d == OUT else contents[d]).add(w2)
    return Configuration({r: frozenset(ws) for r, ws in contents.items()},
                         frozenset(emitted), cfg.step_count + 1)


@dataclass
class RunResult:
    language: frozenset[Word]
    emitted_raw: frozenset[Word]
    exhausted: bool
    steps: int
    fixpoint: bool
    pruned: bool
    capped: bool
    _comp: "_Compiled" = field(repr=False)
    _contents: dict[int, set[str]] = field(repr=False)

    @cached_property
    def final(self) -> Configuration:
        dec = self._comp.codec.decode
        return Configuration({r: frozenset(dec(w) for w in ws)
                              for r, ws in self._contents.items()},
                             self.emitted_raw, self.steps)

    def region_size(self, region: int) -> int:
        return len(self._contents[region])

    @property
    def total_strings(self) -> int:
        return sum(len(ws) for ws in self._contents.values())


class _Compiled:
    """Rules of a system encoded once, with destinations resolved."""

    def __init__(self, sys: PSystemDef):
        self.codec = Codec(sys.alphabet)
        self.regions = sys.tree.regions
        self.rules: dict[int, list[tuple[EncodedRule, tuple[int, ...]]]] = {}
        for r in self.regions:
            self.rules[r] = [(EncodedRule(rule, self.codec),
                              resolve_target(sys.tree, r, rule.target))
                             for rule in sys.rules.get(r, ())]
        self.terminal_chars = frozenset(self.codec.char(t) for t in sys.terminals)


def run(sys: PSystemDef, bounds: Bounds, rng: Optional[random.Random] = None) -> RunResult:
    """Iterate maximally parallel steps from the initial configuration.

    Stops at a fixpoint, after ``max_steps`` steps, or when the number of
    stored strings would exceed ``max_strings``.  ``exhausted`` is true only
    for a fixpoint reached without pruning anything longer than the
    intermediate bound.  ``rng`` shuffles the iteration order; the result
    does not depend on it.
    """
    comp = _Compiled(sys)
    enc = comp.codec.encode
    B = bounds.max_intermediate_len
    cap = bounds.max_strings
    pruned = capped = fixpoint = False

    contents: dict[int, set[str]] = {r: set() for r in comp.regions}
    for r, words in sys.axioms.items():
        for w in words:
            if len(w) > B:
                pruned = True
            else:
                contents[r].add(enc(w))
    frontier = {r: set(ws) for r, ws in contents.items() if ws}
    total = sum(len(ws) for ws in contents.values())
    emitted: set[str] = set()
    steps = 0

    while steps < bounds.max_steps:
        new: dict[int, set[str]] = {r: set() for r in comp.regions}
        grew = False
        regions = list(frontier)
        if rng is not None:
            rng.shuffle(regions)
        for r in regions:
            rules = comp.rules[r]
            if not rules:
                continue
            words = list(frontier[r])
            if rng is not None:
                rng.shuffle(words)
                rules = rng.sample(rules, len(rules))
            for x in words:
                for erule, dests in rules:
                    for y in erule.apply(x):
                        if len(y) > B:
                            pruned = True
                            continue
                        for d in dests:
                            if d == OUT:
                                if y not in emitted:
                                    emitted.add(y)
                                    grew = True
                            elif y not in contents[d] and y not in new[d]:
                                new[d].add(y)
                                grew = True
        steps += 1
        if not grew:
            fixpoint = True
            break
        added = sum(len(ws) for ws in new.values())
        if cap is not None and total + added > cap:
            capped = True
            room = max(cap - total, 0)
            for r in comp.regions:
                keep = sorted(new[r])[:room]
                room -= len(keep)
                new[r] = set(keep)
        for r, ws in new.items():
            contents[r] |= ws
            total += len(ws)
        frontier = {r: ws for r, ws in new.items() if ws}
        if capped:
            break

    dec = comp.codec.decode
    term = comp.terminal_chars
    L = bounds.max_output_len
    language = frozenset(dec(w) for w in emitted
                         if len(w) <= L and all(c in term for c in w))
    return RunResult(language, frozenset(dec(w) for w in emitted),
                     fixpoint and not pruned and not capped, steps,
                     fixpoint, pruned, capped, comp, contents)


# ------------------------------------------------------------ traces

class TraceStep(NamedTuple):
    region: int
    before: Word
    rule: ContextRule
    after: Word
    dest: int

    def __str__(self) -> str:
        dest = "out" if self.dest == OUT else str(self.dest)
        return f"[{self.region}] {show(self.before)} --{self.rule}--> {show(self.after)} ({dest})"


@dataclass(frozen=True)
class Trace:
    steps: tuple[TraceStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def words(self) -> list[tuple[Word, int]]:
        """The visited (word, region) pairs, starting with the axiom."""
        if not self.steps:
            return []
        first = self.steps[0]
        return [(first.before, first.region)] + [(s.after, s.dest) for s in self.steps]

    def __str__(self) -> str:
        return "\n".join(str(s) for s in self.steps)


def trace_witness(sys: PSystemDef, w: Union[Word, str], bounds: Bounds,
                  region: int = OUT) -> Trace:
    """A shortest rule sequence from an axiom that puts ``w`` in ``region``
    (by default: sends ``w`` out of the skin).

    Breadth-first search over (region, word) pairs with parent pointers;
    ties are broken by axiom order, rule order and position, so the result
    is deterministic.
    """
    target = word(w) if isinstance(w, str) else tuple(w)
    comp = _Compiled(sys)
    enc, dec = comp.codec.encode, comp.codec.decode
    goal = (region, enc(target))
    B = bounds.max_intermediate_len

    parent: dict[tuple[int, str], Optional[tuple]] = {}
    queue: deque[tuple[tuple[int, str], int]] = deque()
    for r in comp.regions:
        for a in sorted(sys.axioms.get(r, ())):
            node = (r, enc(a))
            if len(a) <= B and node not in parent:
                parent[node] = None
                queue.append((node, 0))
    if region != OUT and goal in parent:
        return Trace(())

    found = None
    while queue and found is None:
        node, depth = queue.popleft()
        if depth >= bounds.max_steps:
            continue
        r, x = node
        for erule, dests in comp.rules[r]:
            for y in sorted(erule.apply(x)):
                if len(y) > B:
                    continue
                for d in dests:
                    child = (d, y)
                    if child in parent:
                        continue
                    parent[child] = (node, erule.rule)
                    if child == goal:
                        found = child
                        break
                    if d != OUT:
                        queue.append((child, depth + 1))
                if found:
                    break
            if found:
                break
        if bounds.max_strings is not None and len(parent) > bounds.max_strings:
            break
    if found is None:
        raise NotGenerated(f"{show(target)} not reached within {bounds}")

    steps = []
    node = found
    while parent[node] is not None:
        prev, rule = parent[node]
        steps.append(TraceStep(prev[0], dec(prev[1]), rule, dec(node[1]), node[0]))
        node = prev
    return Trace(tuple(reversed(steps)))
