"""
Arrival probability of a lazy random walk
=========================================

Rounding edge weights to multiples of 1/Δ turns a weighted graph into a
multigraph; the chance of reaching y at the earliest possible time is the
geodesic count divided by Δ^t.
"""

from fractions import Fraction

from geodesy import WeightedGraph
from geodesy.walk import arrival_bound, minimal_arrival_probability, quantize_weights
from geodesy.geodesic import geodesic_dag

W = WeightedGraph(edges=[("x", "a", Fraction(1, 2)), ("a", "y", Fraction(1, 2)), ("x", "b", Fraction(1, 2)), ("b", "y", Fraction(1, 2))])
for delta in (2, 4, 8):
    q = quantize_weights(W, delta)
    t = geodesic_dag(q.graph, "x", "y").t
    print(f"Δ={delta}: P = {minimal_arrival_probability(q, 'x', 'y')}, cap {arrival_bound(t)}")

# an irrational-looking weight converges as the grid gets finer
W2 = WeightedGraph(edges=[("x", "y", Fraction(314159, 1000000))])
for delta in (4, 16, 1000):
    print(f"Δ={delta}: rounding error {float(quantize_weights(W2, delta).quantization_error):.2e}")
