"""Tabulate verifier verdicts for the bundled grammars under both constructions.

    python scripts/slice_table.py --lengths 2 3 4 --extra 10 --steps 100 --witness
"""
from __future__ import annotations

import argparse
import time

from insdel.compilers import compile_theorem
from insdel.core import show
from insdel.engine import Bounds
from insdel.formats import sort_words
from insdel.grammars import BUNDLED, bundled
from insdel.membrane import trace_witness
from insdel.verifier import verify


def fmt(words) -> str:
    return "{" + ", ".join(show(w) for w in sort_words(words)) + "}"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--grammars", nargs="+", default=list(BUNDLED), choices=BUNDLED)
    ap.add_argument("--theorems", nargs="+", type=int, default=[1, 2], choices=(1, 2))
    ap.add_argument("--lengths", nargs="+", type=int, default=[4, 5, 6])
    ap.add_argument("--extra", type=int, default=10, help="B = L + extra")
    ap.add_argument("--steps", type=int, default=100)
    ap.add_argument("--witness", action="store_true",
                    help="print a shortest computation for every extra word")
    args = ap.parse_args()

    print(f"{'grammar':8} {'k':>2} {'L':>3} {'verdict':18} {'sec':>6}  system exh/oracle exh"
          "  extra  missing")
    for name in args.grammars:
        g = bundled(name)
        for k in args.theorems:
            for L in args.lengths:
                b = Bounds(L, L + args.extra, args.steps)
                t0 = time.perf_counter()
                rep = verify(g, k, b)
                dt = time.perf_counter() - t0
                print(f"{name:8} {k:>2} {L:>3} {rep.verdict:18} {dt:6.1f}  "
                      f"{str(rep.system_exhausted):5}/{str(rep.grammar_exhausted):5}"
                      f"  {fmt(rep.extra)}  {fmt(rep.missing)}")
                if args.witness:
                    for w in sort_words(rep.extra):
                        for step in trace_witness(compile_theorem(g, k), w, b):
                            print(f"    {step}")


if __name__ == "__main__":
    main()
