# %% [markdown]
# # Exploring unknown polygons
#
# An agent starts on a boundary cell and only sees which neighbors of its
# current cell are free. Plain DFS always needs `2C - 2` steps. SmartDFS
# walks back along shortest known paths, finishes components in a careful
# order when the unvisited region splits, and stays within
# `C + E/4 - 5/2` steps on hex grids and `C + E - 4` on triangle grids.

# %%
from fractions import Fraction

from gridexplore import HEX, TRI, corridor, explore_dfs, explore_smartdfs, honeycomb, random_simple
from gridexplore.render import render_ascii
from gridexplore.textio import serialize_trace

h = honeycomb(1)
print("DFS on the honeycomb:", explore_dfs(h).steps, "steps")
t = explore_smartdfs(h, (1, 0))
print("SmartDFS from a ring cell:", t.steps, "steps, walk", t.walk)

# %% [markdown]
# Width-1 corridors are the worst case: the agent has to come back the
# same way, and the bound is met exactly.

# %%
for kind in (HEX, TRI):
    p = corridor(kind, 1, 10)
    s = explore_smartdfs(p).steps
    bound = p.C + Fraction(p.E, 4) - Fraction(5, 2) if kind is HEX else p.C + p.E - 4
    print(f"{kind.value}: S={s} bound={bound}")

# %% [markdown]
# On a random polygon the trace records every split event: where it
# happened, the layer, and the type of each unvisited component. In the
# sketch `S` marks the start, `*` the split cells, and digits count visits.

# %%
p = random_simple(TRI, 30, seed=4)
t = explore_smartdfs(p)
print(render_ascii(p, t))
for ev in t.events:
    print(ev.at, "layer", ev.layer, [str(k) for k in ev.types], "order", ev.order)
print(f"S={t.steps}  C={p.C}  E={p.E}  bound={p.C + p.E - 4}")

# %% [markdown]
# Traces serialize to a line-per-step text format that the CLI can render.

# %%
print(serialize_trace(explore_smartdfs(corridor(HEX, 1, 3))))
