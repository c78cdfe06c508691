"""
Counting shortest paths in a multigraph
=======================================

Parallel edges count as distinct paths, so a bundle of multiplicity m
multiplies the count by m.
"""

from geodesy import MultiGraph, count_shortest_paths, enumerate_shortest_paths, geodesic_dag

# a 4-cycle with bundles of sizes 1, 2, 1, 2
G = MultiGraph(edges=[("a", "b", 1), ("b", "c", 2), ("c", "d", 1), ("d", "a", 2)])
print("paths a -> c:", count_shortest_paths(G, "a", "c"))

# the layered DAG keeps only edges that lie on some geodesic
dag = geodesic_dag(G, "a", "c")
print("layers:", dag.layers)
for v in dag.interior:
    print(f"  {v}: deg_x={dag.deg_x(v)} deg_y={dag.deg_y(v)}")

# explicit enumeration agrees; each path lists the bundle copy it uses
for p in enumerate_shortest_paths(G, "a", "c"):
    print("  ", p)
