import random

import pytest

from geodesy.bounds import evaluate_bound
from geodesy.errors import BudgetExceededError
from geodesy.extremal import closed_form_count
from geodesy.geodesic import count_shortest_paths
from geodesy.graph import bfs_distances, max_degree
from geodesy.search import LayeredProfile, iter_profiles, search_max_count


def _shape(G):
    return sorted(m for _, _, m in G.edges), sorted(G.degree(v) for v in G.vertices)


def test_profile_count_and_graph():
    P = LayeredProfile((((1, 2),), ((2,), (1,))))
    assert P.layer_sizes == (1, 2, 1)
    assert P.count() == 4
    assert count_shortest_paths(P.to_graph(), "x", "y") == 4


@pytest.mark.parametrize(
    "delta, t, cap, expected, shape",
    [
        (2, 3, 2, 2, ([1] * 6, [2] * 6)),
        (3, 2, 3, 4, ([1, 1, 2, 2], [3] * 4)),
        (4, 2, 2, 8, ([2, 2, 2, 2], [4] * 4)),
    ],
)
def test_small_known_maxima(delta, t, cap, expected, shape):
    res = search_max_count(delta, t, cap)
    assert res.max_count == expected
    G = res.witness_graph
    assert count_shortest_paths(G, "x", "y") == expected
    assert _shape(G) == shape


@pytest.mark.parametrize("delta, t, cap", [(2, 2, 2), (3, 2, 2), (3, 3, 2), (4, 2, 3), (4, 3, 2), (3, 2, 3)])
@pytest.mark.parametrize("simple", [False, True])
def test_memoized_search_matches_brute_force(delta, t, cap, simple):
    profiles = list(iter_profiles(delta, t, cap, simple))
    res = search_max_count(delta, t, cap, simple)
    top = max(p.count() for p in profiles)
    assert res.max_count == top
    assert res.profiles_explored == len(profiles)
    assert res.witness == min((p for p in profiles if p.count() == top), key=lambda p: p.matrices)


def test_profile_counts_match_graph_counts():
    rng = random.Random(0)
    for delta, t in [(3, 3), (4, 2), (3, 4)]:
        profiles = list(iter_profiles(delta, t, 2))
        for P in rng.sample(profiles, min(100, len(profiles))):
            G = P.to_graph()
            assert max_degree(G) <= delta
            assert bfs_distances(G, "x")["y"] == t
            assert P.count() == count_shortest_paths(G, "x", "y")


@pytest.mark.parametrize("delta, t", [(2, 1), (3, 1), (3, 3), (4, 3), (5, 2), (3, 4)])
def test_bounds_sandwich(delta, t):
    res = search_max_count(delta, t, 3)
    assert res.max_count**2 <= evaluate_bound("theorem1", delta, t).squared_value
    assert res.max_count >= closed_form_count("cycle-multigraph", delta, t)
    G = res.witness_graph
    assert max_degree(G) <= delta and bfs_distances(G, "x")["y"] == t


def test_simple_mode_respects_simple_bound():
    for delta, t in [(3, 2), (4, 3), (3, 3)]:
        res = search_max_count(delta, t, 3, simple_mode=True)
        assert res.witness_graph.is_simple()
        assert evaluate_bound("simple", delta, t).admits(res.max_count)


def test_t1():
    assert search_max_count(4, 1).max_count == 4
    assert search_max_count(4, 1, simple_mode=True).max_count == 1


def test_parallel_matches_serial():
    a = search_max_count(3, 4, 3)
    b = search_max_count(3, 4, 3, jobs=2)
    assert a.max_count == b.max_count
    assert a.witness == b.witness
    assert a.profiles_explored == b.profiles_explored


def test_budget(monkeypatch):
    with pytest.raises(BudgetExceededError) as err:
        search_max_count(4, 4, 3, profile_limit=100)
    assert err.value.estimate > 100
    monkeypatch.setenv("GEODESY_PROFILE_LIMIT", "10")
    with pytest.raises(BudgetExceededError):
        search_max_count(4, 3, 3)


def test_result_json():
    d = search_max_count(3, 2, 3).to_dict()
    assert d["max_count"] == "4"
    assert d["witness"]["metadata"] == {"x": "x", "y": "y"}
