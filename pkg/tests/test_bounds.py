import math
import random
from fractions import Fraction

import pytest

from geodesy.bounds import certify, evaluate_bound, refined_certificate
from geodesy.errors import GeodesyError, NotApplicableError
from geodesy.extremal import gen_blowup_cycle, gen_cycle_multigraph
from geodesy.geodesic import geodesic_dag
from geodesy.graph import MultiGraph

from corpus import icosahedron, random_multigraph, reachable_pairs


@pytest.mark.parametrize(
    "kind, delta, t, value",
    [
        ("theorem1", 4, 3, 16),
        ("simple", 5, 2, 5),
        ("conjectured", 3, 4, 8),
        ("triangulation", 5, 3, 10),
        ("naive", 4, 3, 36),
        ("abstract2", 4, 3, 16),
        ("simple", 4, 1, 1),
    ],
)
def test_integer_bounds(kind, delta, t, value):
    b = evaluate_bound(kind, delta, t)
    assert b.value == value
    assert b.squared_value == value**2


def test_half_integer_exponent():
    b = evaluate_bound("theorem1", 3, 2)
    assert b.squared_value == 18
    assert b.value is None and not b.is_integer_valued
    assert float(b) == pytest.approx(3 * math.sqrt(2))
    assert b.admits(4) and not b.admits(5) and b.floor() == 4


def test_abstract_bound_can_be_fractional():
    assert evaluate_bound("abstract2", 3, 2).squared_value == Fraction(81, 4)


def test_simple_three_and_beyond():
    # Δ(Δ-1)(ab)^((t-3)/2): Δ=4, t=3 gives 12; t=4 gives 12*2
    assert evaluate_bound("simple", 4, 3).value == 12
    assert evaluate_bound("simple", 4, 4).value == 24
    assert evaluate_bound("simple", 3, 4).squared_value == 9 * 4 * 2


@pytest.mark.parametrize(
    "kind, delta, t", [("conjectured", 4, 2), ("conjectured", 3, 3), ("triangulation", 2, 3), ("triangulation", 5, 1), ("theorem1", 3, 0)]
)
def test_not_applicable(kind, delta, t):
    with pytest.raises(NotApplicableError):
        evaluate_bound(kind, delta, t)


def test_bound_orderings():
    for delta in range(2, 12):
        for t in range(1, 12):
            thm = evaluate_bound("theorem1", delta, t).squared_value
            assert thm <= evaluate_bound("naive", delta, t).squared_value
            assert thm <= evaluate_bound("abstract2", delta, t).squared_value
            if delta % 2 and t % 2 == 0:
                assert evaluate_bound("conjectured", delta, t).squared_value <= thm


def test_certify_c43():
    G, x, y = gen_cycle_multigraph(3, 2)
    rep = certify(G, x, y, ["theorem1", "conjectured"])
    assert rep.n == 4
    assert rep.verdicts["theorem1"].status == "pass" and not rep.verdicts["theorem1"].tight
    assert rep.verdicts["conjectured"].status == "pass" and rep.verdicts["conjectured"].tight


def test_certify_c64_tight():
    G, x, y = gen_cycle_multigraph(4, 3)
    rep = certify(G, x, y, ["theorem1"])
    assert rep.n == 16 and rep.verdicts["theorem1"].tight
    assert rep.verdicts["theorem1"].bound.squared_value == 256


def test_certify_icosahedron():
    rep = certify(icosahedron(), "top", "bot", ["theorem1", "triangulation"])
    assert rep.n == 10
    assert rep.verdicts["triangulation"].tight
    assert rep.verdicts["theorem1"].status == "pass"
    assert rep.verdicts["theorem1"].bound.squared_value == 900
    assert rep.local_triangulation_condition is True


def test_certify_marks_inapplicable_kinds():
    G, x, y = gen_cycle_multigraph(4, 3)
    rep = certify(G, x, y)
    assert rep.verdicts["simple"].status == "not-applicable"
    assert rep.verdicts["conjectured"].status == "not-applicable"
    # not a triangulation: the local condition fails and so does the bound
    assert rep.local_triangulation_condition is False
    assert rep.verdicts["triangulation"].status == "fail"
    assert not rep.all_pass
    assert all(v.status == "pass" for k, v in rep.verdicts.items() if k in ("naive", "theorem1", "abstract2"))


def test_certify_declared_delta():
    G, x, y = gen_cycle_multigraph(4, 3)
    rep = certify(G, x, y, ["theorem1"], delta=6)
    assert rep.delta == 6 and not rep.verdicts["theorem1"].tight
    with pytest.raises(GeodesyError):
        certify(G, x, y, ["theorem1"], delta=3)


def test_refined_examples():
    path = MultiGraph(edges=[("a", "b"), ("b", "c"), ("c", "d")])
    assert refined_certificate(geodesic_dag(path, "a", "d")) == 1
    G, x, y = gen_cycle_multigraph(4, 2)
    assert refined_certificate(geodesic_dag(G, x, y)) == 64
    B, x, y = gen_blowup_cycle(4, 3)
    dag = geodesic_dag(B, x, y)
    assert refined_certificate(dag) == 4 * 4 * 2 * 2
    assert dag.n_total**2 <= 64


def test_refined_sandwich_on_corpus():
    rng = random.Random(17)
    for _ in range(150):
        G = random_multigraph(rng)
        for x, y in reachable_pairs(G):
            if x == y:
                continue
            dag = geodesic_dag(G, x, y)
            ref = refined_certificate(dag)
            assert dag.n_total**2 <= ref <= evaluate_bound("theorem1", dag.delta, dag.t).squared_value
