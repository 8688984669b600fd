"""Insertion-deletion P systems: rewrite engine, membrane runtime, the two
five-membrane grammar compilers and a bounded verifier."""
from .compilers import T1_SIZE, T2_SIZE, assert_size, compile_t1, compile_t2
from .core import (EPS, ContextRule, Grammar, Kind, NotPenttonen, Production, SizeVector,
                   Target, check_minimality, classify_production, dele, ins, size_of_rules,
                   total_weight, validate_penttonen, word)
from .engine import Bounds, InsDelSystem, apply_deletion, apply_insertion, derive_closure
from .membrane import MembraneTree, PSystemDef, resolve_target, run, step, trace_witness
from .oracle import derive_bfs, membership
from .verifier import diagnose_blocked, replay_golden, verify

__all__ = [
    "EPS", "ContextRule", "Grammar", "Kind", "NotPenttonen", "Production", "SizeVector",
    "Target", "check_minimality", "classify_production", "dele", "ins", "size_of_rules",
    "total_weight", "validate_penttonen", "word",
    "Bounds", "InsDelSystem", "apply_deletion", "apply_insertion", "derive_closure",
    "MembraneTree", "PSystemDef", "resolve_target", "run", "step", "trace_witness",
    "derive_bfs", "membership",
    "T1_SIZE", "T2_SIZE", "assert_size", "compile_t1", "compile_t2",
    "diagnose_blocked", "replay_golden", "verify",
]
