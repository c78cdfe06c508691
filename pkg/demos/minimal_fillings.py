"""
Minimal fillings over F2
========================

A cycle c that bounds has fillings f with ∂f = c.  All of them differ by
a kernel element, so listing the coset gives the smallest size and the
number of minimizers exactly.
"""

from geodesy.filling import ChainF2, boundary, build_complex, is_irreducible, minimal_fillings

X = build_complex("grid2d(3,3)")
centre = X.chain(2, [((1, 1), (0, 1))])
print(minimal_fillings(X, boundary(X, centre)).to_dict())

# on the cube surface each cycle has two fillings, one per side
C = build_complex("cube-surface")
for mask in (0b1, 0b11, 0b111):
    r = minimal_fillings(C, boundary(C, ChainF2(2, mask)))
    print(f"faces {bin(mask)}: m={r.m} count={r.count}")

# two squares meeting at a corner bound a figure eight, which splits
pair = X.chain(2, [((0, 0), (0, 1)), ((1, 1), (0, 1))])
print("figure eight irreducible:", is_irreducible(X, boundary(X, pair)))
