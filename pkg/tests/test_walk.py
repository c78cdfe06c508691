import random
from fractions import Fraction

import pytest

from geodesy.geodesic import geodesic_dag
from geodesy.errors import NoPathError, QuantizationError
from geodesy.extremal import gen_cycle_multigraph
from geodesy.graph import MultiGraph, WeightedGraph
from geodesy.walk import arrival_bound, minimal_arrival_probability, multigraph_walk, quantize_weights

from corpus import random_multigraph, reachable_pairs


@pytest.mark.parametrize("w, delta, mult, err", [("0.5", 4, 2, 0), ("0.3", 10, 3, 0), ("1/3", 6, 2, 0), ("0.26", 4, 1, Fraction(1, 100)), ("1/8", 4, 1, Fraction(1, 8))])
def test_quantize_single_edge(w, delta, mult, err):
    q = quantize_weights(WeightedGraph(edges=[("a", "b", Fraction(w))]), delta)
    assert q.graph.mult("a", "b") == mult
    assert q.quantization_error == err
    assert q.padded_degree("a") == q.padded_degree("b") == delta


def test_rounding_to_zero_warns_and_drops():
    q = quantize_weights(WeightedGraph(edges=[("a", "b", Fraction(1, 2)), ("b", "c", Fraction(1, 20))]), 4)
    assert q.graph.mult("b", "c") == 0
    assert q.warnings and "b-c" in q.warnings[0]
    with pytest.raises(NoPathError):
        minimal_arrival_probability(q, "a", "c")


def test_overfull_vertex():
    W = WeightedGraph(edges=[("a", "b", Fraction(5, 8)), ("a", "c", Fraction(5, 8))])
    with pytest.raises(QuantizationError):
        quantize_weights(W, 4)


def test_examples():
    q = multigraph_walk(MultiGraph(edges=[("x", "y", 4)]))
    assert minimal_arrival_probability(q, "x", "y") == 1 == arrival_bound(1)
    G, x, y = gen_cycle_multigraph(4, 2)
    assert minimal_arrival_probability(multigraph_walk(G), x, y) == Fraction(1, 2) == arrival_bound(2)
    G, x, y = gen_cycle_multigraph(4, 3)
    assert minimal_arrival_probability(multigraph_walk(G), x, y) == Fraction(1, 4) == arrival_bound(3)


def test_padding_does_not_change_probability():
    G, x, y = gen_cycle_multigraph(4, 3)
    tight = minimal_arrival_probability(multigraph_walk(G, 4), x, y)
    padded = multigraph_walk(G, 8)
    assert all(p == 4 for p in padded.padding.values())
    # doubling the slot count halves each step: same paths, denominator 8^t
    assert minimal_arrival_probability(padded, x, y) == tight / 2**3


def test_convergence_of_quantization_error():
    rng = random.Random(9)
    W = WeightedGraph(edges=[(f"v{i}", f"v{i + 1}", Fraction(rng.randint(1, 400), 1000)) for i in range(6)])
    errors = [quantize_weights(W, d).quantization_error for d in (2, 4, 8, 16, 64, 256, 1024)]
    for d, e in zip((2, 4, 8, 16, 64, 256, 1024), errors):
        assert e <= Fraction(1, 2 * d)
    assert errors[-1] < errors[0]


def test_random_quantized_corpus_under_bound():
    rng = random.Random(21)
    for _ in range(200):
        G = random_multigraph(rng)
        q = multigraph_walk(G, max(2, max(G.degree(v) for v in G.vertices) + rng.randint(0, 2)))
        for x, y in reachable_pairs(q.graph):
            if x != y:
                t = geodesic_dag(q.graph, x, y).t
                assert minimal_arrival_probability(q, x, y) <= arrival_bound(t)
