"""From a singular fade state to a relay map, step by step.

A Latin square over the sender symbols is a denoise-and-forward relay map:
row/column exclusion is exactly the requirement that each end node can
decode the other's symbol.  To also survive the singular fade state s, every
pair of sender symbols whose superpositions collide must map to the same
relay symbol.  Grouping the collisions partitions the grid into constraint
blocks; blocks sharing a row or column must take different symbols, which is
vertex coloring of the singularity removal graph.
"""

from lsnc import (
    build_constraints,
    build_srg,
    constrained_pls,
    exact_chromatic,
    from_coloring,
    make_square_qam,
    verify_latin,
    verify_removes,
)
from lsnc.cli import render_grid

qam4 = make_square_qam(4)
s = 0.5 + 0.5j

print(f"Signal set: 4-QAM, fade state s = {s}")
part = build_constraints(qam4, s)
multi = part.multi_blocks()
print(f"\nStep 1 — constraints: {len(part.blocks)} blocks, "
      f"{len(multi)} of them multi-cell:")
for i, block in enumerate(multi, 1):
    print(f"  block {i}: {sorted(block)}")

print("\nStep 2 — the constrained partial square (each block pre-filled):")
print(render_grid(constrained_pls(part)))

graph = build_srg(part)
print(f"\nStep 3 — removal graph: {graph.n} vertices, {graph.edge_count} edges")

result = exact_chromatic(graph)
print(f"\nStep 4 — exact chromatic number: chi = {result.chi} "
      f"(optimal = {result.optimal})")
print("Four senders but five relay symbols: removing this state costs one")
print("extra symbol, and the coloring search proves no cheaper map exists.")

grid = from_coloring(part, result.coloring)
print("\nStep 5 — the finished relay map:")
print(render_grid(grid))
print(f"latin = {verify_latin(grid)}, removes s = {verify_removes(grid, part)}, "
      f"symbols = {grid.symbol_count}")
