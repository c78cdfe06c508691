"""
Searching layered profiles for the maximum count
================================================

For odd Δ the bound is not known to be sharp.  An exhaustive search over
layered multigraphs with small layers finds the best count at each size.
"""

from geodesy import evaluate_bound, search_max_count

for delta, t in ((3, 2), (3, 4), (5, 2), (4, 3)):
    res = search_max_count(delta, t, layer_cap=3)
    bound = evaluate_bound("theorem1", delta, t)
    print(
        f"Δ={delta} t={t}: max {res.max_count} (floor of bound {bound.floor()}),"
        f" {res.profiles_explored} profiles, layer sizes {res.witness.layer_sizes}"
    )

# simple graphs only: every bundle has multiplicity one
print("simple Δ=4 t=3:", search_max_count(4, 3, layer_cap=3, simple_mode=True).max_count)
