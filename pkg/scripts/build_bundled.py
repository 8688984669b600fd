"""Regenerate the compiled system files shipped under src/insdel/data/systems."""
from pathlib import Path

from insdel.compilers import compile_theorem
from insdel.formats import format_system
from insdel.grammars import BUNDLED, bundled

out = Path(__file__).resolve().parents[1] / "src" / "insdel" / "data" / "systems"
out.mkdir(parents=True, exist_ok=True)
for name in BUNDLED:
    for k in (1, 2):
        path = out / f"{name}_t{k}.psys"
        path.write_text(format_system(compile_theorem(bundled(name), k)))
        print(path)
