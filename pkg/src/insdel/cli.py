"""Command-line front end.

Exit codes: 0 success (``verify``: slices equal), 1 mismatch, 2 parse
error, 3 grammar not in Penttonen normal form, 4 bounds too small to
decide, 5 word not generated (``trace``).
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional

from .compilers import T1_SIZE, T2_SIZE, compile_theorem, system_size
from .core import total_weight, validate_penttonen, word
from .engine import Bounds
from .formats import (FormatError, format_listing, format_system, parse_grammar_lines,
                      parse_system)
from .membrane import NotGenerated, run, trace_witness
from .oracle import derive_bfs
from .verifier import EQUAL, MISMATCH, verify

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_NOT_PENTTONEN, EXIT_INCOMPLETE, EXIT_NOT_GENERATED = \
    range(6)
DEFAULT_MAX_STRINGS = 1_000_000


class _Exit(Exception):
    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code


def max_strings() -> int:
    raw = os.environ.get("INSDEL_MAX_STRINGS")
    return int(raw) if raw else DEFAULT_MAX_STRINGS


def _bounds(args, max_len: Optional[int] = None) -> Bounds:
    L = args.max_len if max_len is None else max_len
    B = args.max_intermediate if args.max_intermediate is not None else L + 10
    try:
        return Bounds(L, B, args.max_steps, max_strings())
    except ValueError as e:
        raise _Exit(EXIT_PARSE, f"bad bounds: {e}") from None


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise _Exit(EXIT_PARSE, str(e)) from None


def _grammar(path: str, penttonen: bool = True):
    try:
        g, lines = parse_grammar_lines(_read(path))
    except FormatError as e:
        raise _Exit(EXIT_PARSE, f"{path}: {e}") from None
    if penttonen:
        problems = validate_penttonen(g)
        if problems:
            msg = "\n".join(f"{path}:{lines.get(v.index, 0)}: {v}" for v in problems)
            raise _Exit(EXIT_NOT_PENTTONEN, msg)
    return g


def _system(path: str):
    try:
        return parse_system(_read(path))
    except FormatError as e:
        raise _Exit(EXIT_PARSE, f"{path}: {e}") from None


def cmd_compile(args) -> int:
    g = _grammar(args.grammar)
    sysdef = compile_theorem(g, args.theorem)
    text = format_system(sysdef)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    size = system_size(sysdef)
    bound = T1_SIZE if args.theorem == 1 else T2_SIZE
    ok = "certified" if size.dominated_by(bound) else f"EXCEEDS {bound}"
    print(f"size {size} psi={total_weight(size)} ({ok}); "
          f"{len(sysdef.all_rules())} rules, {len(sysdef.tree.regions)} membranes",
          file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    sysdef = _system(args.system)
    res = run(sysdef, _bounds(args))
    sys.stdout.write(format_listing(res.language, res.exhausted))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _grammar(args.grammar, penttonen=False)
    L = args.max_len
    B = args.max_intermediate if args.max_intermediate is not None else 2 * L + 4
    try:
        bounds = Bounds(L, B, args.max_steps, max_strings())
    except ValueError as e:
        raise _Exit(EXIT_PARSE, f"bad bounds: {e}") from None
    res = derive_bfs(g, bounds)
    sys.stdout.write(format_listing(res.language, res.exhausted))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _grammar(args.grammar)
    report = verify(g, args.theorem, _bounds(args))
    sys.stdout.write(report.summary())
    if report.verdict == EQUAL:
        return EXIT_OK
    return EXIT_MISMATCH if report.verdict == MISMATCH else EXIT_INCOMPLETE


def cmd_trace(args) -> int:
    sysdef = _system(args.system)
    target = word(args.target)
    L = args.max_len if args.max_len is not None else len(target)
    try:
        tr = trace_witness(sysdef, target, _bounds(args, max_len=max(L, len(target))))
    except NotGenerated as e:
        raise _Exit(EXIT_NOT_GENERATED, str(e)) from None
    for s in tr:
        print(s)
    return EXIT_OK


def cmd_size(args) -> int:
    size = system_size(_system(args.system))
    print(f"{size} psi={total_weight(size)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="insdel",
                                description="Insertion-deletion P systems from Penttonen grammars")
    sub = p.add_subparsers(dest="command", required=True)

    def bounds_opts(sp, max_len_required=True):
        sp.add_argument("--max-len", "-L", type=int, required=max_len_required,
                        default=None, help="longest word to report")
        sp.add_argument("--max-intermediate", "-B", type=int, default=None,
                        help="prune words longer than this (default L+10)")
        sp.add_argument("--max-steps", "-S", type=int, default=100)

    sp = sub.add_parser("compile", help="compile a grammar into a P system")
    sp.add_argument("grammar")
    sp.add_argument("--theorem", "-t", type=int, choices=(1, 2), required=True)
    sp.add_argument("--out", "-o")
    sp.set_defaults(func=cmd_compile)

    sp = sub.add_parser("enumerate", help="list the bounded language of a system")
    sp.add_argument("system")
    bounds_opts(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("oracle", help="brute-force language slice of a grammar")
    sp.add_argument("grammar")
    bounds_opts(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", help="compare a grammar with its compiled system")
    sp.add_argument("grammar")
    sp.add_argument("--theorem", "-t", type=int, choices=(1, 2), required=True)
    bounds_opts(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("trace", help="shortest computation emitting a word")
    sp.add_argument("system")
    sp.add_argument("--target", "-w", required=True, help="space-separated word, or eps")
    bounds_opts(sp, max_len_required=False)
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("size", help="size vector and total weight of a system")
    sp.add_argument("system")
    sp.set_defaults(func=cmd_size)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as e:
        if str(e):
            print(str(e), file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
