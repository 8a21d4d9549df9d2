# %% [markdown]
# # Grids and polygons
#
# Two lattices are supported. Hex cells use axial coordinates `(q, r)`;
# triangle cells are `(x, y)` and point up when `x + y` is even. Neighbor
# lists always come back in clockwise order.

# %%
from gridexplore import HEX, TRI, corridor, honeycomb, neighbors, random_simple, random_thick, touching
from gridexplore.polygon import holes
from gridexplore.render import render_ascii

print("hex neighbors of (0,0):", neighbors((0, 0), HEX))
print("up triangle (0,0):    ", neighbors((0, 0), TRI))
print("down triangle (1,0):  ", neighbors((1, 0), TRI))
print("triangles touching (0,0) at a corner:", len(touching((0, 0), TRI)))

# %% [markdown]
# A polygon is an edge-connected set of free cells. Its area `C` is the
# cell count and its perimeter `E` counts free/blocked edges. A width-1 hex
# corridor has `E = 4C + 2`.

# %%
for n in (1, 3, 8):
    p = corridor(HEX, 1, n)
    print(f"hex corridor of {n}: C={p.C} E={p.E} 4C+2={4 * p.C + 2}")

h = honeycomb(1)
print(f"honeycomb: C={h.C} E={h.E}")
print(render_ascii(h))

# %% [markdown]
# Layers are boundary shells: layer 1 touches the outside, layer 2 touches
# layer 1, and so on. The offset at depth `l` keeps what lies deeper.

# %%
big = honeycomb(3)
print("layer sizes:", {l: sum(1 for v in big.layers.values() if v == l) for l in sorted(set(big.layers.values()))})
print("1-offset has", len(big.offset(1)), "cells")

# %% [markdown]
# Random simple polygons grow one cell at a time and never enclose a hole.
# The thick variant dilates such a shape, which gives it an interior.
# Knocking an interior cell out creates a hole.

# %%
p = random_simple(TRI, 40, seed=3)
print(render_ascii(p))
print("simple:", p.simple)

blob = random_thick(TRI, 12, seed=3)
interior = min(blob.offset(1))
print("thick blob:", blob.C, "cells; removing", interior, "leaves holes", holes(blob.free - {interior}, TRI))
