"""
Closed-form bounds and per-graph certificates
=============================================

Bounds are kept as exact squared rationals, so half-integer exponents
such as (ab)^(1/2) never go through floating point.
"""

from geodesy import certify, evaluate_bound, gen_cycle_multigraph, geodesic_dag, refined_certificate

for kind in ("naive", "abstract2", "theorem1"):
    b = evaluate_bound(kind, 3, 4)
    print(f"{kind:>10}: B^2 = {b.squared_value}, floor(B) = {b.floor()}")

# the alternating cycle meets the odd-Δ, even-t value exactly
G, x, y = gen_cycle_multigraph(3, 4)
rep = certify(G, x, y, ["theorem1", "conjectured"])
for kind, v in rep.verdicts.items():
    print(f"{kind:>12}: {v.status}, tight={v.tight}")

# the refined certificate uses the degrees actually present in the DAG
dag = geodesic_dag(G, x, y)
print("n^2 =", dag.n_total**2, "<= refined =", refined_certificate(dag))
