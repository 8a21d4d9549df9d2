# %% [markdown]
# # How far from optimal?
#
# The offline optimum is the shortest closed walk through every cell. It
# is computed exactly: dead-end cells are peeled off (each costs exactly
# two steps), then Held-Karp solves the rest over shortest-path
# distances. Cores beyond the solver ceiling are answered only when a
# Hamiltonian cycle proves the trivial lower bound.

# %%
from fractions import Fraction

from gridexplore import HEX, comp_hex, comp_tri, competitive_ratio, explore_smartdfs, optimal_tour, random_simple
from gridexplore.oracle import brute_force_tour_length

p = random_simple(HEX, 9, seed=11)
tour = optimal_tour(p)
print("Held-Karp:", tour.length, "| brute force:", brute_force_tour_length(p), "| method:", tour.method)

# %% [markdown]
# SmartDFS never exceeds four thirds of the optimum. The width-3 hex
# corridor below drives the ratio toward that value: every instance obeys
# `3 S = 4 S_opt - 7`.

# %%
for m in (1, 4, 10, 24):
    q = comp_hex(m)
    t = explore_smartdfs(q)
    opt = optimal_tour(q, t.start)
    r = competitive_ratio(t, opt)
    print(f"length {m:2d}: S={t.steps:3d} S_opt={opt.length:3d} ratio={r} ({float(r):.4f}) [{opt.method}]")

# %% [markdown]
# A reconstructed triangle family climbs more slowly.

# %%
for n in (1, 2, 4, 8):
    q = comp_tri(n)
    t = explore_smartdfs(q)
    r = competitive_ratio(t, optimal_tour(q, t.start))
    print(f"rows {n}: ratio {r} ({float(r):.4f}) vs 4/3 = {float(Fraction(4, 3)):.4f}")
