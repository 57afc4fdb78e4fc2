"""Draw SC_2 as four offset sheets, one per quadrant tag.

Run: python demos/06_figure.py [out.svg]
"""
import sys

from splitfractal import RenderSpec, render_svg, split_carpet_level

cells = sorted(split_carpet_level(2).cells.uniform_cells(2, 3))
svg = render_svg(cells, RenderSpec("four_sheet_offset"))
out = sys.argv[1] if len(sys.argv) > 1 else "split_carpet_level2.svg"
with open(out, "w", encoding="utf-8") as fh:
    fh.write(svg)
print(f"wrote {out}: {len(cells)} cells x 4 sheets")
