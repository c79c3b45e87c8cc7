"""Render the extremal packing of n = 1541551 from the counterexample witness, plus a small one.

    python scripts/render_witness.py out/
"""

import sys
from pathlib import Path

from wegner.geometry import RenderOptions, export_csv, export_svg, realize
from wegner.search import complete_seq, find_extremal

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
out.mkdir(parents=True, exist_ok=True)

witness = realize(complete_seq(702, 717, 714, 741))
(out / "witness_1541551.csv").write_text(export_csv(witness))
print(f"witness: {len(witness)} points, {witness.boundary_count} boundary discs")

small = realize(find_extremal(100).sorted_solutions()[0])
(out / "extremal_100.svg").write_text(export_svg(small, RenderOptions(scale=12)))
print(f"n=100: seq={tuple(small.seq)}, {small.boundary_count} boundary discs")
