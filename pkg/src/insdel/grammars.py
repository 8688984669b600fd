"""Grammars shipped with the package, plus the one-production grammars
used for golden derivation chains."""
from __future__ import annotations

from importlib import resources

from .core import Grammar
from .formats import parse_grammar

BUNDLED = ("g_ab", "g_ctx", "g_eps")


def bundled_text(name: str) -> str:
    return (resources.files("insdel") / "data" / "grammars" / f"{name}.grammar").read_text()


def bundled(name: str) -> Grammar:
    """``g_ab`` generates a^n b^n, ``g_ctx`` is {ab, ac} through a
    context-sensitive step, ``g_eps`` is {eps, a, b, ab} with erasing rules."""
    if name not in BUNDLED:
        raise KeyError(name)
    return parse_grammar(bundled_text(name))


def single(lhs: str, rhs: str) -> Grammar:
    """Grammar with one production over A, B, C (and terminal a)."""
    return Grammar.build("A B C".split(), ["a"], "A", [(lhs, rhs)])
