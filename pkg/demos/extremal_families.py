"""
Extremal families
=================

Alternating-bundle cycles attain the bound for even Δ.  Blowing each
vertex of a cycle up into a group gives simple graphs with many geodesics,
and circulant joins push the girth up at the cost of some paths.
"""

from geodesy import count_shortest_paths, gen_blowup_cycle, gen_cycle_multigraph, girth
from geodesy.extremal import closed_form_count

for t in range(1, 6):
    G, x, y = gen_cycle_multigraph(4, t)
    print(f"cycle Δ=4 t={t}: n = {count_shortest_paths(G, x, y)}")

for mode, kw in (("even", {}), ("high-girth", {"girth_bound": 5})):
    G, x, y = gen_blowup_cycle(4, 4, mode, **kw)
    print(f"blowup {mode:>10}: {len(G)} vertices, girth {girth(G)}, n = {count_shortest_paths(G, x, y)}")

# two arcs around the group cycle, each contributing (Δ/2)^(t-1)
print("closed form Δ=4 t=4:", closed_form_count("blowup-cycle", 4, 4))
